#include "poly_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace zetafree {

namespace {

struct Slot {
  bool seen = false;
  double value = 0.0;
};

void assign(std::vector<Slot>& slots, int k, double v, int n, long line, const char* tag) {
  if (k < 0 || k > n) {
    throw ParseError(std::string(tag) + " index out of range in polynomial file", line);
  }
  if (slots[k].seen) {
    throw ParseError(std::string("duplicate ") + tag + " entry in polynomial file", line);
  }
  slots[k] = {true, v};
}

bool complete(const std::vector<Slot>& slots) {
  for (const Slot& s : slots) {
    if (!s.seen) return false;
  }
  return !slots.empty();
}

std::vector<double> values(const std::vector<Slot>& slots) {
  std::vector<double> out;
  out.reserve(slots.size());
  for (const Slot& s : slots) out.push_back(s.value);
  return out;
}

}  // namespace

PolynomialFile read_polynomial(std::istream& in, const std::string& name) {
  std::string raw;
  long lineno = 0;
  int n = -1;
  std::vector<Slot> cs, as;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string text = raw.substr(0, raw.find('#'));
    std::istringstream line(text);
    std::string tag;
    if (!(line >> tag)) continue;
    if (tag == "n") {
      if (n >= 0) throw ParseError("duplicate degree line in " + name, lineno);
      if (!(line >> n) || n < 0) throw ParseError("bad degree line in " + name, lineno);
      cs.resize(n + 1);
      as.resize(n + 1);
    } else if (tag == "c" || tag == "a") {
      if (n < 0) throw ParseError("coefficient before degree line in " + name, lineno);
      int k;
      double v;
      if (!(line >> k >> v)) throw ParseError("bad coefficient line in " + name, lineno);
      assign(tag == "c" ? cs : as, k, v, n, lineno, tag.c_str());
    } else {
      throw ParseError("unrecognized line tag '" + tag + "' in " + name, lineno);
    }
  }
  if (n < 0) throw ParseError("missing degree line in " + name, lineno);

  PolynomialFile out;
  bool have_c = complete(cs), have_a = complete(as);
  if (!have_c && !have_a) {
    throw ParseError("polynomial file " + name + " has neither a complete c nor a list", lineno);
  }
  if (have_c) out.factor = SpectralFactor::from(values(cs));
  if (have_a) {
    out.poly = CosinePolynomial::from(values(as));
  } else {
    out.poly = normalized(cosine_from_factor(*out.factor));
  }
  return out;
}

PolynomialFile read_polynomial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open polynomial file: " + path);
  return read_polynomial(in, path);
}

void write_polynomial(std::ostream& out, const CosinePolynomial& poly, const SpectralFactor* factor) {
  char buf[64];
  out << "n " << poly.n << "\n";
  if (factor != nullptr) {
    for (int k = 0; k <= factor->n; ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", factor->c[k]);
      out << "c " << k << " " << buf << "\n";
    }
  }
  for (int k = 0; k <= poly.n; ++k) {
    std::snprintf(buf, sizeof buf, "%.17g", poly.a[k]);
    out << "a " << k << " " << buf << "\n";
  }
}

void write_polynomial(const std::string& path, const CosinePolynomial& poly, const SpectralFactor* factor) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  write_polynomial(out, poly, factor);
}

}  // namespace zetafree
