#include "rbperm/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace rbperm {

std::string format_permutation(const Permutation& p) {
  std::string out;
  const auto& w = p.word();
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) out.push_back(' ');
    out += std::to_string(w[k]);
  }
  return out;
}

Permutation parse_permutation(const std::string& line) {
  std::istringstream in(line);
  std::vector<int> values;
  int v;
  while (in >> v) values.push_back(v);
  return Permutation::from_word(std::move(values));
}

void write_permutations(std::ostream& out,
                        const std::vector<Permutation>& perms) {
  for (const Permutation& p : perms) out << format_permutation(p) << '\n';
}

std::vector<Permutation> read_permutations(std::istream& in) {
  std::vector<Permutation> perms;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    perms.push_back(parse_permutation(line));
  }
  return perms;
}

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace rbperm
