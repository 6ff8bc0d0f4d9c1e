#ifndef GRAFT_ERRORS_HPP
#define GRAFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graft {

// Base of every domain error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Programmatic misuse (negative counts, bad ranges).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Graph construction rejected the edge set (self-loop, duplicate, endpoint out of range).
class InvalidGraph : public Error {
public:
    using Error::Error;
};

class EmptyGraph : public Error {
public:
    using Error::Error;
};

class PathTooShort : public Error {
public:
    using Error::Error;
};

class InvalidSpec : public Error {
public:
    using Error::Error;
};

class InputNotRegular : public Error {
public:
    using Error::Error;
};

class InputNotConnected : public Error {
public:
    using Error::Error;
};

class WrongVertexCount : public Error {
public:
    WrongVertexCount(int expected, int actual);
    int expected;
    int actual;
};

class DegreeMismatch : public Error {
public:
    DegreeMismatch(int vertex, int expected, int actual);
    int vertex;
    int expected;
    int actual;
};

class InfeasibleTrivial : public Error {
public:
    using Error::Error;
};

class BadWitness : public Error {
public:
    using Error::Error;
};

class ParityViolation : public Error {
public:
    ParityViolation(int r, int k);
    int r;
    int k;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

// Edge-list parse errors, all carrying the 1-based input line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what);
    int line;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class VertexOutOfRange : public ParseError {
public:
    using ParseError::ParseError;
};

class DuplicateEdge : public ParseError {
public:
    using ParseError::ParseError;
};

class SelfLoop : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace graft

#endif
