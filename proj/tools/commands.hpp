#pragma once

#include <string>
#include <vector>

namespace zhcli {

enum Exit : int { kOk = 0, kUsage = 2, kBudget = 3, kInvariant = 4 };

struct ConstructConfig {
  std::string function;
  unsigned base = 10;
  std::string interval = "0,1";
  std::size_t digits = 100;
  std::size_t steps = 64;
  std::size_t max_digits = 2048;
  std::string out = ".";
};

struct FamilyConfig {
  std::vector<std::string> functions;
  std::string generator;
  std::string q_list;
  unsigned base = 10;
  std::string bases;
  std::string interval = "0,1";
  std::size_t steps = 60;
  std::size_t max_digits = 2048;
  unsigned jobs = 1;
  std::string out = ".";
};

struct CantorConfig {
  std::size_t grid = 0;
  std::size_t ternary_depth = 0;
  std::string points;
  std::size_t k = 2;
  std::string format = "csv";
  std::string out;  // file; stdout when empty
  unsigned jobs = 1;
};

struct AnalyzeConfig {
  std::string digits_file;
  std::string rational;
  unsigned base = 10;
  std::size_t depth = 256;
  std::string certificates;
  std::string label;
  std::string format = "text";
};

struct BoundConfig {
  unsigned base = 2;
  std::string s = "1";
  std::size_t K = 40;
  std::size_t M_cap = 0;  // 0 means 2K
  std::string epsilon;    // empty: choose by halving
  std::string format = "json";
  std::string out;
};

int cmd_construct(const ConstructConfig& c);
int cmd_family(const FamilyConfig& c);
int cmd_cantor(const CantorConfig& c);
int cmd_analyze(const AnalyzeConfig& c);
int cmd_bound(const BoundConfig& c);

}  // namespace zhcli
