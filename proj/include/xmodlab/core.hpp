// Shared vocabulary for xmodlab: element indices, flat operation tables,
// the library exception type and validation reports.
//
// Every finite object in xmodlab is a set of tables over the index range
// 0..n-1. Checks never stop at the first failed axiom; instead each
// violated condition is recorded once, with the lexicographically first
// witness tuple, so that reports are deterministic.

#ifndef XMODLAB_CORE_HPP_
#define XMODLAB_CORE_HPP_

#include <array>        // for array
#include <cstddef>      // for size_t
#include <cstdint>      // for uint32_t, uint64_t
#include <optional>     // for optional
#include <stdexcept>    // for runtime_error
#include <string>       // for string
#include <string_view>  // for string_view
#include <utility>      // for move
#include <vector>       // for vector

namespace xmodlab {

  using Elem = std::uint32_t;

  //! Default bound on the number of candidate assignments an enumeration
  //! may visit before giving up with ErrorCode::BudgetExceeded.
  inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

  enum class ErrorCode {
    DimensionMismatch,
    IndexOutOfRange,
    InvalidSignature,
    SignatureMismatch,
    BudgetExceeded,
    NotASection,
    NotKernel,
    InvalidAction,
    NotComposable,
    InvalidMorphism,
    InvalidCrossedModule,
    InvalidGroupoid,
    RoundTripFailure,
    EndpointMismatch,
    InvalidHomotopy,
    NotDeltaImage,
    InvalidDerivation,
    BaseMismatch,
    NotRegular,
    InternalInconsistency,
    UnknownName,
    ParseError,
    UsageError,
    FileNotFound
  };

  std::string_view to_string(ErrorCode code) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& message);

    ErrorCode code() const noexcept {
      return code_;
    }

   private:
    ErrorCode code_;
  };

  //! Dense row-major table of element indices.
  class Table {
   public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols, Elem fill = 0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Table(std::size_t rows, std::size_t cols, std::vector<Elem> data);

    Elem operator()(std::size_t r, std::size_t c) const {
      return data_[r * cols_ + c];
    }
    Elem& operator()(std::size_t r, std::size_t c) {
      return data_[r * cols_ + c];
    }

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    std::vector<Elem> const& data() const noexcept {
      return data_;
    }
    std::vector<Elem> row(std::size_t r) const;

    //! Throws IndexOutOfRange if any entry is >= bound.
    void check_range(std::size_t bound, std::string_view what) const;

    friend bool operator==(Table const&, Table const&) = default;

   private:
    std::size_t       rows_ = 0;
    std::size_t       cols_ = 0;
    std::vector<Elem> data_;
  };

  //! Throws IndexOutOfRange if any entry of a one-row table is >= bound.
  void check_range(std::vector<Elem> const& row,
                   std::size_t              bound,
                   std::string_view         what);

  //! Visits all N-tuples with t[k] < extents[k] in lexicographic order and
  //! returns the first one for which holds(t) is false.
  template <std::size_t N, typename Pred>
  std::optional<std::array<Elem, N>>
  find_witness(std::array<std::size_t, N> const& extents, Pred&& holds) {
    for (auto e : extents) {
      if (e == 0) {
        return std::nullopt;
      }
    }
    std::array<Elem, N> t{};
    for (;;) {
      if (!holds(static_cast<std::array<Elem, N> const&>(t))) {
        return t;
      }
      std::size_t k = N;
      for (;;) {
        if (k == 0) {
          return std::nullopt;
        }
        --k;
        if (++t[k] < extents[k]) {
          break;
        }
        t[k] = 0;
      }
    }
  }

  struct Violation {
    std::string       condition;
    std::string       op;  // empty unless the condition is per-operation
    std::vector<Elem> witness;
    std::string       detail;

    friend bool operator==(Violation const&, Violation const&) = default;
  };

  class ValidationReport {
   public:
    bool valid() const noexcept {
      return violations_.empty();
    }

    //! Records v unless a violation with the same condition and op exists.
    void add(Violation v);

    //! Runs a lexicographic witness search and records the first failure.
    //! Returns true when the condition holds everywhere.
    template <std::size_t N, typename Pred>
    bool expect(std::string                       condition,
                std::string                       op,
                std::array<std::size_t, N> const& extents,
                Pred&&                            holds,
                std::string                       detail = {}) {
      auto w = find_witness(extents, std::forward<Pred>(holds));
      if (!w) {
        return true;
      }
      add(Violation{std::move(condition),
                    std::move(op),
                    std::vector<Elem>(w->begin(), w->end()),
                    std::move(detail)});
      return false;
    }

    bool                     has(std::string_view condition) const;
    Violation const*         find(std::string_view condition) const;
    std::vector<Violation> const& violations() const noexcept {
      return violations_;
    }

    //! Appends other's violations with prefix + ":" prepended to each
    //! condition id (no prefix when empty). Notes are carried over.
    void merge(ValidationReport const& other, std::string_view prefix = {});

    void note(std::string text);
    std::vector<std::string> const& notes() const noexcept {
      return notes_;
    }

    //! One line per violation, for messages and the text CLI output.
    std::string summary() const;

   private:
    std::vector<Violation>   violations_;
    std::vector<std::string> notes_;
  };

}  // namespace xmodlab

#endif  // XMODLAB_CORE_HPP_
