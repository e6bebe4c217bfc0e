#pragma once

// Gate truth tables as printed in the reference text, one "inputs outputs"
// string per row. Kept as literal rows so they stay independent of the
// gate formulas in the library.

#include <string>
#include <vector>

namespace rpga::testing {

struct GateTable {
  std::string id;    // table label, for messages
  std::string gate;  // library gate name
  std::vector<std::string> rows;
};

inline const std::vector<GateTable>& gate_tables() {
  static const std::vector<GateTable> tables = {
      {"CNOT", "feynman", {"00 00", "01 01", "10 11", "11 10"}},
      {"Feynman", "feynman", {"00 00", "01 01", "10 11", "11 10"}},
      {"Toffoli",
       "toffoli",
       {"000 000", "001 001", "010 010", "011 011", "100 100", "101 101", "110 111", "111 110"}},
      {"Fredkin",
       "fredkin",
       {"000 000", "001 001", "010 010", "011 011", "100 100", "101 110", "110 101", "111 111"}},
      {"Peres",
       "peres",
       {"000 000", "001 001", "010 010", "011 011", "100 110", "101 111", "110 101", "111 100"}},
      {"Fault tolerant Fredkin",
       "frg",
       {"000 000", "001 001", "010 010", "011 011", "100 100", "101 110", "110 101", "111 111"}},
      {"Double Feynman",
       "f2g",
       {"000 000", "001 001", "010 010", "011 011", "100 111", "101 110", "110 101", "111 100"}},
      {"NFT",
       "nft",
       {"000 000", "001 010", "010 100", "011 101", "100 111", "101 110", "110 011", "111 001"}},
      {"Conservative Fredkin",
       "fredkin",
       {"000 000", "001 001", "010 010", "011 011", "100 100", "101 110", "110 101", "111 111"}},
      {"Picton",
       "picton",
       {"0000 0000", "0001 0010", "0010 0001", "0011 0011", "0100 0100", "0101 0101", "0110 0110",
        "0111 0111", "1000 1000", "1001 1010", "1010 1001", "1011 1011", "1100 1100", "1101 1110",
        "1110 1101", "1111 1111"}},
      {"Kerntopf",
       "kerntopf",
       {"000 111", "001 001", "010 000", "011 100", "100 010", "101 101", "110 011", "111 110"}},
  };
  return tables;
}

/// Standard definitions for the two builtins without a printed table.
inline const std::vector<GateTable>& standard_tables() {
  static const std::vector<GateTable> tables = {
      {"NOT", "not", {"0 1", "1 0"}},
      {"SWAP", "swap", {"00 00", "01 10", "10 01", "11 11"}},
  };
  return tables;
}

/// MAX/MIN restriction of the picton pair: "a b max min".
inline const std::vector<std::string>& picton_maxmin_rows() {
  static const std::vector<std::string> rows = {"00 00", "01 10", "10 10", "11 11"};
  return rows;
}

/// Kerntopf with C tied to 1, as printed (each row appears twice): "ABC PQR".
inline const std::vector<std::string>& kerntopf_maxmin_rows() {
  static const std::vector<std::string> rows = {"001 001", "001 001", "011 100", "011 100",
                                                "101 101", "101 101", "111 110", "111 110"};
  return rows;
}

/// The adder benchmark after projection: "abc out1 out2".
inline const std::vector<std::string>& adder_rows() {
  static const std::vector<std::string> rows = {"000 00", "001 10", "010 10", "011 01",
                                                "100 10", "101 01", "110 01", "111 11"};
  return rows;
}

/// A three-input function whose first output is not symmetric.
inline const std::vector<std::string>& asymmetric_rows() {
  static const std::vector<std::string> rows = {"000 00", "001 10", "010 10", "011 01",
                                                "100 00", "101 10", "110 01", "111 00"};
  return rows;
}

}  // namespace rpga::testing
