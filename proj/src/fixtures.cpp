#include "lcgf2/fixtures.hpp"

namespace lcgf2::fixtures {

std::array<SymMatrix, 4> triangle_family() {
  return {SymMatrix::from_rows({"011", "101", "110"}),
          SymMatrix::from_rows({"011", "100", "100"}),
          SymMatrix::from_rows({"010", "101", "010"}),
          SymMatrix::from_rows({"001", "001", "110"})};
}

std::array<SymMatrix, 3> four_vertex_family() {
  return {SymMatrix::from_rows({"0010", "0001", "1001", "0110"}),
          SymMatrix::from_rows({"0110", "1011", "1100", "0100"}),
          SymMatrix::from_rows({"0111", "1010", "1101", "1010"})};
}

Labels five_labels() {
  static const Labels labels{"a", "b", "c", "d", "e"};
  return labels;
}

SymMatrix rel_cprime_c() {
  return SymMatrix::from_rows(five_labels(), {"00010", "00110", "01110", "11100", "00001"});
}
SymMatrix rel_c_cprime() {
  return SymMatrix::from_rows(five_labels(), {"10110", "01100", "11000", "10000", "00001"});
}
SymMatrix rel_p_c() {
  return SymMatrix::from_rows(five_labels(), {"00000", "01000", "00000", "00010", "00000"});
}
SymMatrix rel_p_cprime() {
  return SymMatrix::from_rows(five_labels(), {"10000", "01100", "01100", "00000", "00000"});
}
SymMatrix rel_pp_c() {
  return SymMatrix::from_rows(five_labels(), {"00000", "01100", "01100", "00010", "00001"});
}
SymMatrix rel_pp_cprime() {
  return SymMatrix::from_rows(five_labels(), {"10000", "00000", "00100", "00000", "00001"});
}

std::vector<std::string_view> core_p_c() { return {"00001", "10001", "10100", "00100"}; }
std::vector<std::string_view> core_p_cprime() { return {"00001", "00011", "01100", "01110"}; }
std::vector<std::string_view> core_pp_c() { return {"10000", "01100", "11100"}; }
std::vector<std::string_view> core_pp_cprime() { return {"00010", "01000", "01010"}; }

}  // namespace lcgf2::fixtures
