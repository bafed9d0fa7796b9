#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "mdlmon/btl.hpp"

namespace mdlmon {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// Maps proposition names to indices. Names of the form p<digits> claim that
/// index; any other name gets the lowest unused index in first-seen order.
class PropTable {
public:
  PropId intern(const std::string& name);
  std::string name_of(PropId id) const;

private:
  std::map<std::string, PropId> by_name_;
  std::map<std::uint32_t, std::string> by_index_;
  std::uint32_t next_auto_ = 1;
};

BtlFormula parse_btl(const std::string& text);
BtlFormula parse_btl(const std::string& text, PropTable& props);

}  // namespace mdlmon
