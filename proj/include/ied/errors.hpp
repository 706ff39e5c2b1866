#pragma once

#include <stdexcept>
#include <string>

namespace ied {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotUniformError : public Error {
  public:
    NotUniformError(int edge_index, int size)
        : Error("hypergraph is not uniform: edge " + std::to_string(edge_index) +
                " has size " + std::to_string(size)),
          edge_index(edge_index), size(size) {}
    int edge_index;
    int size;
};

class IncompleteColoringError : public Error {
  public:
    explicit IncompleteColoringError(int vertex)
        : Error("vertex " + std::to_string(vertex) + " is uncolored"), vertex(vertex) {}
    int vertex;
};

class ArityMismatchError : public Error {
  public:
    ArityMismatchError(int expected, int got)
        : Error("permutation family arity " + std::to_string(got) +
                " does not match uniformity " + std::to_string(expected)) {}
};

class PiNotClosedError : public Error {
  public:
    PiNotClosedError() : Error("permutation family is not closed under inverse") {}
};

class ListTooShortError : public Error {
  public:
    ListTooShortError(int vertex, int size, int required)
        : Error("list of vertex " + std::to_string(vertex) + " has " + std::to_string(size) +
                " colors, need " + std::to_string(required)),
          vertex(vertex) {}
    int vertex;
};

class DrawExhaustedError : public Error {
  public:
    DrawExhaustedError() : Error("explicit draw sequence exhausted") {}
};

class InconsistentLogError : public Error {
  public:
    explicit InconsistentLogError(const std::string& what)
        : Error("inconsistent conflict log: " + what) {}
};

class OutOfRangeError : public Error {
  public:
    explicit OutOfRangeError(const std::string& what) : Error(what) {}
};

class NotBipartiteError : public Error {
  public:
    NotBipartiteError() : Error("graph is not bipartite") {}
};

class NotNiceError : public Error {
  public:
    NotNiceError() : Error("graph has an isolated edge component") {}
};

class NotRegularError : public Error {
  public:
    NotRegularError() : Error("graph is not regular") {}
};

class TooLargeError : public Error {
  public:
    explicit TooLargeError(const std::string& what) : Error(what) {}
};

class SearchSpaceTooLargeError : public Error {
  public:
    explicit SearchSpaceTooLargeError(const std::string& what) : Error(what) {}
};

class NotGeneralPositionError : public Error {
  public:
    explicit NotGeneralPositionError(const std::string& what) : Error(what) {}
};

class NotConfigurationError : public Error {
  public:
    explicit NotConfigurationError(const std::string& what) : Error(what) {}
};

class BadClauseSizeError : public Error {
  public:
    explicit BadClauseSizeError(const std::string& what) : Error(what) {}
};

class NotDistinguishingError : public Error {
  public:
    explicit NotDistinguishingError(const std::string& what) : Error(what) {}
};

class LabelingInvalidError : public Error {
  public:
    explicit LabelingInvalidError(const std::string& what) : Error(what) {}
};

class ParseError : public Error {
  public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

class InvalidInputError : public Error {
  public:
    explicit InvalidInputError(const std::string& what) : Error(what) {}
};

}  // namespace ied
