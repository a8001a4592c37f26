#ifndef WIDTHKIT_ERRORS_HPP
#define WIDTHKIT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace widthkit {

/// A search tree outgrew its configured node budget.
class resource_limit_error : public std::runtime_error {
public:
    resource_limit_error(const std::string& what, std::uint64_t budget)
        : std::runtime_error(what), budget_(budget) {}
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t budget_;
};

/// A decomposition failed structural validation; lists every violated invariant.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string s = "invalid decomposition:";
        for (const auto& x : v) s += " [" + x + "]";
        return s;
    }
    std::vector<std::string> violations_;
};

/// Text input rejected by a parser; carries the byte offset and, for syntax
/// errors, the token set that would have been accepted.
class parse_error : public std::runtime_error {
public:
    enum class Kind { syntax, semantic };

    parse_error(Kind kind, std::size_t offset, const std::string& what,
                std::vector<std::string> expected = {})
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
          kind_(kind), offset_(offset), expected_(std::move(expected)) {}

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    Kind kind_;
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// A bound was asked about an object outside the class it is proved for.
class class_violation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace widthkit

#endif
