#include "xtint/text_format.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "xtint/errors.hpp"

namespace xtint {
namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw UsageError("line " + std::to_string(line_no) + ": " + what);
}

struct Header {
  int n = -1;
  int k = -1;
};

Header parse_header(const std::string& line, int line_no) {
  Header h;
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) fail(line_no, "expected header 'n=<n> k=<k>'");
    const std::string key = token.substr(0, eq);
    int value = 0;
    try {
      value = std::stoi(token.substr(eq + 1));
    } catch (const std::exception&) {
      fail(line_no, "bad header value '" + token + "'");
    }
    if (key == "n") {
      h.n = value;
    } else if (key == "k") {
      h.k = value;
    } else {
      fail(line_no, "unknown header key '" + key + "'");
    }
  }
  if (h.n < 0 || h.k < 0) fail(line_no, "header needs both n and k");
  return h;
}

Subset parse_member(const std::string& line, int n, bool allow_digits, int line_no) {
  if (line == "{}") return Subset(n, 0);
  std::vector<int> elements;
  if (line.find(',') == std::string::npos && allow_digits && n <= 9 && line.size() > 1) {
    for (char c : line) {
      if (c < '1' || c > '9') fail(line_no, "bad digit '" + std::string(1, c) + "'");
      elements.push_back(c - '0');
    }
  } else {
    std::istringstream in(line);
    std::string item;
    while (std::getline(in, item, ',')) {
      item = trim(item);
      try {
        std::size_t used = 0;
        elements.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        fail(line_no, "bad element '" + item + "'");
      }
    }
  }
  for (std::size_t idx = 1; idx < elements.size(); ++idx) {
    if (elements[idx] <= elements[idx - 1]) fail(line_no, "elements must be strictly ascending");
  }
  try {
    return Subset::from_elements(n, elements);
  } catch (const Error& e) {
    fail(line_no, e.what());
  }
}

template <typename Build>
auto read_members(std::istream& in, bool allow_digits, Build build) {
  std::string raw;
  int line_no = 0;
  Header header;
  bool have_header = false;
  std::vector<Subset> members;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      header = parse_header(line, line_no);
      if (header.n > kWordCap) fail(line_no, "n exceeds the word cap of 64");
      have_header = true;
      continue;
    }
    members.push_back(parse_member(line, header.n, allow_digits, line_no));
  }
  if (!have_header) throw UsageError("missing 'n=<n> k=<k>' header");
  return build(header.n, header.k, members);
}

}  // namespace

void write_family(std::ostream& out, const UniformFamily& family) {
  out << "n=" << family.n() << " k=" << family.k() << '\n';
  for (std::size_t idx = 0; idx < family.size(); ++idx) {
    out << to_string(family.member(idx)) << '\n';
  }
}

std::string format_family(const UniformFamily& family) {
  std::ostringstream out;
  write_family(out, family);
  return out.str();
}

UniformFamily read_family(std::istream& in) {
  return read_members(in, false, [](int n, int k, const std::vector<Subset>& members) {
    for (const Subset& s : members) {
      if (s.size() != k) {
        throw UsageError("member " + to_string(s) + " does not have size " + std::to_string(k));
      }
    }
    return UniformFamily::from_subsets(n, k, members);
  });
}

void write_genset(std::ostream& out, const GenSet& g) {
  out << "n=" << g.n() << " k=" << g.k() << '\n';
  for (const Subset& e : g.elements()) out << to_string(e) << '\n';
}

std::string format_genset(const GenSet& g) {
  std::ostringstream out;
  write_genset(out, g);
  return out.str();
}

GenSet read_genset(std::istream& in) {
  return read_members(in, true, [](int n, int k, std::vector<Subset> members) {
    return GenSet(n, k, std::move(members));
  });
}

}  // namespace xtint
