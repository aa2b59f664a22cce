#ifndef SPTI_ALKANE_NAMES_HPP
#define SPTI_ALKANE_NAMES_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spti/graph.hpp"

namespace spti {

class NameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Branch { Methyl, Ethyl, Propyl, Isopropyl, Butyl, Isobutyl, SecButyl, TertButyl };

int branch_size(Branch b) noexcept;
std::string_view branch_name(Branch b) noexcept;

struct Substituent {
  int locant = 0;  // 1-based position on the parent chain
  Branch branch = Branch::Methyl;

  friend bool operator==(const Substituent&, const Substituent&) = default;
};

/// Parent chain plus substituents, in the order they were written.
struct AlkaneAst {
  int parent_length = 0;
  std::vector<Substituent> substituents;

  int carbon_count() const noexcept;
  friend bool operator==(const AlkaneAst&, const AlkaneAst&) = default;
};

inline constexpr int kMaxParentLength = 20;

/// Case-insensitive parse of substitutive alkane names such as
/// "2,2,4-Trimethylpentane", "2.7-Dimethyloctane", "4-n-Propylheptane" or
/// "2-Methyl-3.3-diethylpentane". Locant lists may use ',' or '.'.
/// Multiplier prefixes (di..hexa) must match the locant count. A small alias
/// table covers locant-free trivial names ("Tetramethylbutane").
/// Throws NameError on any grammar, range or valence violation.
AlkaneAst parse_name(std::string_view name);

/// Carbon skeleton: parent chain on vertices 0..L-1, branches appended in
/// substituent order. Throws NameError if any carbon would exceed degree 4.
Graph to_graph(const AlkaneAst& ast);

std::string describe(const AlkaneAst& ast);

}  // namespace spti

#endif  // SPTI_ALKANE_NAMES_HPP
