#include "graft/errors.hpp"

namespace graft {

WrongVertexCount::WrongVertexCount(int expected_, int actual_)
    : Error("wrong vertex count: expected " + std::to_string(expected_) + ", got " +
            std::to_string(actual_)),
      expected(expected_),
      actual(actual_) {}

DegreeMismatch::DegreeMismatch(int vertex_, int expected_, int actual_)
    : Error("degree mismatch at vertex " + std::to_string(vertex_) + ": expected " +
            std::to_string(expected_) + ", got " + std::to_string(actual_)),
      vertex(vertex_),
      expected(expected_),
      actual(actual_) {}

ParityViolation::ParityViolation(int r_, int k_)
    : Error("parity violation: r*k must be even (r=" + std::to_string(r_) +
            ", k=" + std::to_string(k_) + ")"),
      r(r_),
      k(k_) {}

ParseError::ParseError(int line_, const std::string& what)
    : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}

}  // namespace graft
