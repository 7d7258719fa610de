#include "gaunt/complex.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace gaunt {

std::size_t Complex::count(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return names_[degree].size();
}

std::vector<std::size_t> Complex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& d : names_) out.push_back(d.size());
  return out;
}

std::size_t Complex::total_count() const {
  std::size_t n = 0;
  for (const auto& d : names_) n += d.size();
  return n;
}

const std::string& Complex::generator_name(int degree, std::size_t index) const {
  return names_.at(degree).at(index);
}

std::optional<GeneratorRef> Complex::find(std::string_view name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

GeneratorRef Complex::at(std::string_view name) const {
  auto g = find(name);
  if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "' in " + name_);
  return *g;
}

const Chain& Complex::boundary(int degree, std::size_t index) const {
  if (degree < 1) throw std::invalid_argument("boundary of a degree-0 generator");
  return boundary_.at(degree).at(index);
}

const Chain& Complex::boundary_minus(int degree, std::size_t index) const {
  if (degree < 1) throw std::invalid_argument("boundary of a degree-0 generator");
  return boundary_minus_.at(degree).at(index);
}

const Chain& Complex::boundary_plus(int degree, std::size_t index) const {
  if (degree < 1) throw std::invalid_argument("boundary of a degree-0 generator");
  return boundary_plus_.at(degree).at(index);
}

Chain Complex::boundary_of(const Chain& c) const {
  if (c.degree() < 1) throw std::invalid_argument("boundary of a degree-0 chain");
  if (c.width() != count(c.degree()))
    throw std::invalid_argument("chain does not belong to " + name_);
  Chain out = zero(c.degree() - 1);
  for (std::size_t i = 0; i < c.width(); ++i) {
    if (c[i] == 0) continue;
    const Chain& b = boundary_[c.degree()][i];
    for (std::size_t j = 0; j < b.width(); ++j)
      if (b[j] != 0) out[j] += c[i] * b[j];
  }
  return out;
}

Chain Complex::generator(int degree, std::size_t index, const Integer& coefficient) const {
  return Chain::basis(degree, count(degree), index, coefficient);
}

Chain Complex::generator(std::string_view name) const {
  auto g = at(name);
  return generator(g.degree, g.index);
}

Integer Complex::augmentation(const Chain& c) const {
  if (c.degree() != 0) return 0;
  return c.coefficient_sum();
}

std::string Complex::format(const Chain& c) const {
  std::vector<std::pair<std::string, Integer>> terms;
  for (std::size_t i = 0; i < c.width(); ++i)
    if (c[i] != 0) terms.emplace_back(generator_name(c.degree(), i), c[i]);
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string out;
  for (const auto& [name, k] : terms) {
    Integer mag = abs(k);
    if (k < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (mag != 1) out += mag.str() + "*";
    out += name;
  }
  return out;
}

Complex Complex::renamed(std::string name) const {
  Complex c = *this;
  c.name_ = std::move(name);
  return c;
}

bool operator==(const Complex& a, const Complex& b) {
  return a.name_ == b.name_ && a.names_ == b.names_ && a.boundary_ == b.boundary_ &&
         a.endpoints_ == b.endpoints_;
}

ComplexBuilder& ComplexBuilder::add(int degree, std::string name, std::vector<Term> boundary) {
  if (degree < 0) throw std::invalid_argument("negative degree for generator '" + name + "'");
  if (degree == 0 && !boundary.empty())
    throw std::invalid_argument("degree-0 generator '" + name + "' cannot have a boundary");
  if (entries_.size() <= static_cast<std::size_t>(degree)) entries_.resize(degree + 1);
  entries_[degree].push_back({std::move(name), std::move(boundary)});
  return *this;
}

ComplexBuilder& ComplexBuilder::endpoints(std::string bottom, std::string top) {
  endpoints_ = std::make_pair(std::move(bottom), std::move(top));
  return *this;
}

Complex ComplexBuilder::build() const {
  Complex x;
  x.name_ = name_;
  for (std::size_t d = 0; d < entries_.size(); ++d)
    if (entries_[d].empty())
      throw std::invalid_argument("complex '" + name_ + "' has no generators in degree " +
                                  std::to_string(d) + " below its top degree");
  x.names_.resize(entries_.size());
  for (std::size_t d = 0; d < entries_.size(); ++d) {
    for (std::size_t i = 0; i < entries_[d].size(); ++i) {
      const auto& n = entries_[d][i].name;
      if (n.empty()) throw std::invalid_argument("empty generator name");
      if (!x.lookup_.emplace(n, GeneratorRef{static_cast<int>(d), i}).second)
        throw std::invalid_argument("duplicate generator name '" + n + "'");
      x.names_[d].push_back(n);
    }
  }
  x.boundary_.resize(entries_.size());
  x.boundary_minus_.resize(entries_.size());
  x.boundary_plus_.resize(entries_.size());
  for (std::size_t d = 1; d < entries_.size(); ++d) {
    for (const auto& e : entries_[d]) {
      Chain b = x.zero(static_cast<int>(d) - 1);
      for (const auto& [k, target] : e.boundary) {
        auto g = x.find(target);
        if (!g || g->degree != static_cast<int>(d) - 1)
          throw std::invalid_argument("boundary of '" + e.name + "' refers to '" + target +
                                      "', which is not a degree-" + std::to_string(d - 1) +
                                      " generator");
        b[g->index] += k;
      }
      x.boundary_plus_[d].push_back(b.positive_part());
      x.boundary_minus_[d].push_back(b.negative_part());
      x.boundary_[d].push_back(std::move(b));
    }
  }
  if (endpoints_) {
    auto lo = x.find(endpoints_->first);
    auto hi = x.find(endpoints_->second);
    if (!lo || !hi || lo->degree != 0 || hi->degree != 0)
      throw std::invalid_argument("endpoints of '" + name_ + "' must be degree-0 generators");
    x.endpoints_ = Endpoints{lo->index, hi->index};
  }
  return x;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Chain parse_chain(const Complex& x, int degree, std::string_view text) {
  Chain out = x.zero(degree);
  text = trim(text);
  // a generator named "0" (orientals) wins over the zero literal in its degree
  if (auto g = x.find(text); g && g->degree == degree) {
    out[g->index] = 1;
    return out;
  }
  if (text == "0" || text == "id" || text.empty()) return out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    }
    std::size_t end = text.find_first_of("+-", pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = trim(text.substr(pos, end - pos));
    Integer k = 1;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      k = Integer(std::string(trim(term.substr(0, star))));
      term = trim(term.substr(star + 1));
    }
    auto g = x.find(term);
    if (!g) throw std::invalid_argument("unknown generator '" + std::string(term) + "'");
    if (g->degree != degree)
      throw std::invalid_argument("generator '" + std::string(term) + "' has degree " +
                                  std::to_string(g->degree) + ", expected " + std::to_string(degree));
    out[g->index] += sign * k;
    pos = end;
  }
  return out;
}

std::vector<std::pair<Chain, Chain>> atom_entries(const Complex& x, GeneratorRef g) {
  std::vector<std::pair<Chain, Chain>> entries(g.degree + 1);
  Chain top = x.generator(g.degree, g.index);
  entries[g.degree] = {top, top};
  for (int k = g.degree; k >= 1; --k) {
    entries[k - 1].first = x.boundary_of(entries[k].first).negative_part();
    entries[k - 1].second = x.boundary_of(entries[k].second).positive_part();
  }
  return entries;
}

}  // namespace gaunt
