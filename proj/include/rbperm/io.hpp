#ifndef RBPERM_IO_HPP
#define RBPERM_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rbperm/permutation.hpp"

namespace rbperm {

/// One permutation per line, space-separated 1-based values: "6 3 2 1 7 4 5".
std::string format_permutation(const Permutation& p);
Permutation parse_permutation(const std::string& line);

void write_permutations(std::ostream& out,
                        const std::vector<Permutation>& perms);
std::vector<Permutation> read_permutations(std::istream& in);

/// Full-precision text for CSV cells; round-trips any finite double.
std::string csv_double(double v);

}  // namespace rbperm

#endif
