#include "kinvar/scalar.hpp"

#include <cctype>

namespace kinvar {

namespace {

std::string rat_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("GaussianRational: empty component");
  mpq_class q;
  if (q.set_str(s.find('/') == std::string::npos ? s + "/1" : s, 10) != 0)
    throw std::invalid_argument("GaussianRational: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("GaussianRational: zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

std::string GaussianRational::to_string() const {
  if (im_ == 0) return rat_str(re_);
  if (re_ == 0) {
    if (im_ < 0) return "-" + rat_str(mpq_class(-im_)) + "*i";
    return rat_str(im_) + "*i";
  }
  std::string s = rat_str(re_);
  if (im_ < 0)
    s += "-" + rat_str(mpq_class(-im_)) + "*i";
  else
    s += "+" + rat_str(im_) + "*i";
  return s;
}

GaussianRational GaussianRational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("GaussianRational: empty string");
  size_t star = s.rfind("*i");
  if (star == std::string::npos) return GaussianRational(parse_rat(s));
  // split off the imaginary component at the sign preceding it
  size_t split = std::string::npos;
  for (size_t pos = star; pos > 0; --pos) {
    char c = s[pos - 1];
    if ((c == '+' || c == '-') && pos - 1 > 0) {
      split = pos - 1;
      break;
    }
  }
  if (star + 2 != s.size())
    throw std::invalid_argument("GaussianRational: bad value '" + s + "'");
  if (split == std::string::npos)  // pure imaginary, e.g. "2/3*i" or "-2/3*i"
    return GaussianRational(mpq_class(0), parse_rat(s.substr(0, star)));
  mpq_class re = parse_rat(s.substr(0, split));
  mpq_class im = parse_rat(s.substr(split + 1, star - split - 1));
  if (s[split] == '-') im = -im;
  return GaussianRational(std::move(re), std::move(im));
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) {
  return os << q.to_string();
}

}  // namespace kinvar
