#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpx {

struct RunConfig {
  std::string command;
  std::string sub;  // subcommand or identity name
  std::string diagram;
  std::string type;
  std::string vertex_order;
  std::string root;
  std::string format = "ascii";
  std::string word;
  std::string by;  // second braid for ratio
  std::string free_word;
  std::string f, g;
  std::string vertices;
  std::string check;
  std::string A, B, C;
  int strands = 0;
  int order = -1;
  int terms = 20;
  int series = -2;  // -2: none
  int cycle = -1;
  int depth = -1;
  int random_trees = 0;
  int max_vertices = 8;
  int random = 0;
  int schur = -1;
  int a2m = -1;
  std::vector<std::string> pair;
  std::uint64_t seed = 42;
  bool json = false;
  bool timing = false;
  bool reduced = false;
  bool char_poly = false;
  bool cofactors = false;
};

struct CommandInfo {
  std::string command;
  std::string sub;
  std::vector<std::string> operations;
};

// Every command and the library operations it reaches.
const std::vector<CommandInfo>& dispatch_table();

// Throws Error(UsageError) on bad flags. Returns false when help was printed.
bool parse_args(int argc, const char* const* argv, RunConfig& config, std::ostream& out);

// Exit status: 0 success, 1 a verification failed, 2 usage error, 3 other error.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_args followed by run.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cpx
