#pragma once

#include <stdexcept>
#include <string>

namespace isofrag {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A multiplication table failed a group axiom (Latin square, identity,
/// inverses or associativity).
class NotAGroupError : public Error {
public:
    explicit NotAGroupError(const std::string& reason)
        : Error("not a group: " + reason) {}
};

/// A relation (or Cayley connection set) is missing a loop at some vertex.
class NotReflexiveError : public Error {
public:
    explicit NotReflexiveError(const std::string& detail)
        : Error("relation not reflexive: " + detail) {}
};

/// kappa_k / fragments requested on a graph that is not k-separable.
class NotSeparableError : public Error {
public:
    explicit NotSeparableError(int k)
        : Error("graph is not " + std::to_string(k) + "-separable"), k_(k) {}
    int k() const { return k_; }

private:
    int k_;
};

/// An input exceeds a configured search budget.
class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& detail)
        : Error("budget exceeded: " + detail) {}
};

/// An operation that requires a nonempty set was given an empty one.
class EmptySetError : public Error {
public:
    explicit EmptySetError(const std::string& detail)
        : Error("empty set: " + detail) {}
};

/// Scan was asked for a theorem id it does not know.
class UnknownTheoremError : public Error {
public:
    explicit UnknownTheoremError(const std::string& id)
        : Error("unknown theorem: " + id) {}
};

}  // namespace isofrag
