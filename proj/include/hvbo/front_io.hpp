#ifndef HVBO_FRONT_IO_HPP
#define HVBO_FRONT_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hvbo/types.hpp"

namespace hvbo {

/// Locale-independent "%.17g"; infinities serialize as inf / -inf.
std::string format_double(double v);

/// Parses "1,2.5,inf" style comma lists.
ObjVec parse_vector(const std::string& text);

/// Front file readers keyed on extension: .json holds an array of arrays,
/// .csv one point per line. Both reject ragged rows and non-numeric cells.
std::vector<ObjVec> read_front_file(const std::string& path);
std::vector<ObjVec> parse_front_json(const std::string& text);
std::vector<ObjVec> parse_front_csv(std::istream& in);

void write_front(std::ostream& out, const std::vector<ObjVec>& pts, const std::string& format);

/// Box list as CSV with 2d columns l_1..l_d,u_1..u_d.
void write_boxes_csv(std::ostream& out, const BoxPartition& part);
void write_boxes_json(std::ostream& out, const BoxPartition& part);

}  // namespace hvbo

#endif  // HVBO_FRONT_IO_HPP
