#include "xmodlab/core.hpp"

#include <algorithm>  // for find_if
#include <sstream>    // for ostringstream

namespace xmodlab {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
      case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
      case ErrorCode::InvalidSignature:
        return "InvalidSignature";
      case ErrorCode::SignatureMismatch:
        return "SignatureMismatch";
      case ErrorCode::BudgetExceeded:
        return "BudgetExceeded";
      case ErrorCode::NotASection:
        return "NotASection";
      case ErrorCode::NotKernel:
        return "NotKernel";
      case ErrorCode::InvalidAction:
        return "InvalidAction";
      case ErrorCode::NotComposable:
        return "NotComposable";
      case ErrorCode::InvalidMorphism:
        return "InvalidMorphism";
      case ErrorCode::InvalidCrossedModule:
        return "InvalidCrossedModule";
      case ErrorCode::InvalidGroupoid:
        return "InvalidGroupoid";
      case ErrorCode::RoundTripFailure:
        return "RoundTripFailure";
      case ErrorCode::EndpointMismatch:
        return "EndpointMismatch";
      case ErrorCode::InvalidHomotopy:
        return "InvalidHomotopy";
      case ErrorCode::NotDeltaImage:
        return "NotDeltaImage";
      case ErrorCode::InvalidDerivation:
        return "InvalidDerivation";
      case ErrorCode::BaseMismatch:
        return "BaseMismatch";
      case ErrorCode::NotRegular:
        return "NotRegular";
      case ErrorCode::InternalInconsistency:
        return "InternalInconsistency";
      case ErrorCode::UnknownName:
        return "UnknownName";
      case ErrorCode::ParseError:
        return "ParseError";
      case ErrorCode::UsageError:
        return "UsageError";
      case ErrorCode::FileNotFound:
        return "FileNotFound";
    }
    return "Unknown";
  }

  Error::Error(ErrorCode code, std::string const& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  Table::Table(std::size_t rows, std::size_t cols, std::vector<Elem> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::DimensionMismatch,
                  "table of " + std::to_string(rows_) + "x"
                      + std::to_string(cols_) + " given "
                      + std::to_string(data_.size()) + " entries");
    }
  }

  std::vector<Elem> Table::row(std::size_t r) const {
    auto first = data_.begin() + static_cast<std::ptrdiff_t>(r * cols_);
    return {first, first + static_cast<std::ptrdiff_t>(cols_)};
  }

  void Table::check_range(std::size_t bound, std::string_view what) const {
    xmodlab::check_range(data_, bound, what);
  }

  void check_range(std::vector<Elem> const& row,
                   std::size_t              bound,
                   std::string_view         what) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] >= bound) {
        throw Error(ErrorCode::IndexOutOfRange,
                    std::string(what) + ": entry " + std::to_string(row[i])
                        + " at position " + std::to_string(i)
                        + " is not below " + std::to_string(bound));
      }
    }
  }

  void ValidationReport::add(Violation v) {
    auto same = [&v](Violation const& w) {
      return w.condition == v.condition && w.op == v.op;
    };
    if (std::find_if(violations_.begin(), violations_.end(), same)
        == violations_.end()) {
      violations_.push_back(std::move(v));
    }
  }

  bool ValidationReport::has(std::string_view condition) const {
    return find(condition) != nullptr;
  }

  Violation const* ValidationReport::find(std::string_view condition) const {
    auto it = std::find_if(
        violations_.begin(), violations_.end(), [condition](auto const& v) {
          return v.condition == condition;
        });
    return it == violations_.end() ? nullptr : &*it;
  }

  void ValidationReport::merge(ValidationReport const& other,
                               std::string_view        prefix) {
    for (auto v : other.violations_) {
      if (!prefix.empty()) {
        v.condition = std::string(prefix) + ":" + v.condition;
      }
      add(std::move(v));
    }
    for (auto const& n : other.notes_) {
      note(n);
    }
  }

  void ValidationReport::note(std::string text) {
    if (std::find(notes_.begin(), notes_.end(), text) == notes_.end()) {
      notes_.push_back(std::move(text));
    }
  }

  std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (auto const& v : violations_) {
      out << v.condition;
      if (!v.op.empty()) {
        out << " [" << v.op << "]";
      }
      out << " witness (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        out << (i == 0 ? "" : ", ") << v.witness[i];
      }
      out << ")";
      if (!v.detail.empty()) {
        out << ": " << v.detail;
      }
      out << '\n';
    }
    return out.str();
  }

}  // namespace xmodlab
