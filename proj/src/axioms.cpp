#include "linchoice/axioms.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

#include "linchoice/error.hpp"

namespace linchoice {

namespace {

constexpr std::array<std::pair<Axiom, std::string_view>, 21> kNames{{
    {Axiom::kSS0, "SS0"},   {Axiom::kSS1, "SS1"},   {Axiom::kSS2, "SS2"},
    {Axiom::kSS3, "SS3"},   {Axiom::kSS4, "SS4"},   {Axiom::kSS5, "SS5"},
    {Axiom::kSS6, "SS6"},   {Axiom::kSS5E, "SS5E"}, {Axiom::kSS6E, "SS6E"},
    {Axiom::kLCR1, "LCR1"}, {Axiom::kLCR2, "LCR2"}, {Axiom::kLCR3, "LCR3"},
    {Axiom::kLCR4, "LCR4"}, {Axiom::kLCR5, "LCR5"}, {Axiom::kLCR6, "LCR6"},
    {Axiom::kLCA1, "LCA1"}, {Axiom::kLCA2, "LCA2"}, {Axiom::kLCA3, "LCA3"},
    {Axiom::kLCA4, "LCA4"}, {Axiom::kLCA5, "LCA5"}, {Axiom::kLCA6, "LCA6"},
}};

constexpr std::array kUnionClosedSuite{Axiom::kSS0, Axiom::kSS1, Axiom::kSS2,
                                       Axiom::kSS3, Axiom::kSS4, Axiom::kSS5,
                                       Axiom::kSS6};
constexpr std::array kGeneralSuite{Axiom::kSS0, Axiom::kSS1,  Axiom::kSS2,
                                   Axiom::kSS3, Axiom::kSS4,  Axiom::kSS5E,
                                   Axiom::kSS6E};

AxiomReport holds(Axiom a) { return {a, true, {}}; }
AxiomReport violated(Axiom a, std::vector<AltSet> witness) {
  return {a, false, std::move(witness)};
}

std::vector<AltSet> image_of(const ChoiceFunctionTable& table) {
  std::vector<AltSet> img(table.values().begin(), table.values().end());
  canonicalize(img);
  return img;
}

std::size_t image_index(const std::vector<AltSet>& img, AltSet s) {
  return static_cast<std::size_t>(
      std::lower_bound(img.begin(), img.end(), s) - img.begin());
}

// First directed cycle found by depth-first search from vertices in
// ascending order, visiting successors in ascending order. The cycle starts at
// the vertex the closing back edge points to.
std::optional<std::vector<std::size_t>> find_cycle(
    const std::vector<std::vector<std::size_t>>& adj) {
  enum Color : unsigned char { kWhite, kGray, kBlack };
  const std::size_t n = adj.size();
  std::vector<Color> color(n, kWhite);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // vertex, next edge
  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != kWhite) continue;
    stack.emplace_back(root, 0);
    color[root] = kGray;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next == adj[v].size()) {
        color[v] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][next++];
      if (color[w] == kGray) {
        std::vector<std::size_t> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const auto& f) { return f.first == w; });
        for (; it != stack.end(); ++it) cycle.push_back(it->first);
        return cycle;
      }
      if (color[w] == kWhite) {
        color[w] = kGray;
        stack.emplace_back(w, 0);
      }
    }
  }
  return std::nullopt;
}

AxiomReport check_ss0(const ChoiceFunctionTable& t) {
  const auto& st = t.structure();
  auto domain = st.domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (st.has_realizable_subset(domain[i]) && !t.at(i).subset_of(domain[i])) {
      return violated(Axiom::kSS0, {domain[i]});
    }
  }
  return holds(Axiom::kSS0);
}

AxiomReport check_ss1(const ChoiceFunctionTable& t) {
  auto domain = t.structure().domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!t.at(i).subset_of(domain[i]) && t.at(i) != t.fallback()) {
      return violated(Axiom::kSS1, {domain[i]});
    }
  }
  return holds(Axiom::kSS1);
}

AxiomReport check_ss2(const ChoiceFunctionTable& t) {
  auto domain = t.structure().domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (t.fallback().subset_of(domain[i]) && t.at(i) != t.fallback()) {
      return violated(Axiom::kSS2, {domain[i]});
    }
  }
  return holds(Axiom::kSS2);
}

AxiomReport check_ss3(const ChoiceFunctionTable& t) {
  auto domain = t.structure().domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = i + 1; j < domain.size(); ++j) {
      if (t.at(i).subset_of(domain[j]) && t.at(j).subset_of(domain[i]) &&
          t.at(i) != t.at(j)) {
        return violated(Axiom::kSS3, {domain[i], domain[j]});
      }
    }
  }
  return holds(Axiom::kSS3);
}

AxiomReport check_ss4(const ChoiceFunctionTable& t) {
  auto domain = t.structure().domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (!t.at(i).subset_of(domain[i])) continue;
    for (std::size_t j = 0; j < domain.size(); ++j) {
      if (domain[i].subset_of(domain[j]) && !t.at(j).subset_of(domain[j])) {
        return violated(Axiom::kSS4, {domain[i], domain[j]});
      }
    }
  }
  return holds(Axiom::kSS4);
}

AxiomReport check_ss5(const ChoiceFunctionTable& t) {
  const auto& st = t.structure();
  const auto img = image_of(t);
  std::vector<std::vector<std::size_t>> adj(img.size());
  for (std::size_t x = 0; x < img.size(); ++x) {
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (x == y) continue;
      auto u = st.domain_index(img[x] | img[y]);
      if (u && t.at(*u) == img[x]) adj[x].push_back(y);
    }
  }
  if (auto cycle = find_cycle(adj)) {
    std::vector<AltSet> w;
    for (auto v : *cycle) w.push_back(img[v]);
    return violated(Axiom::kSS5, std::move(w));
  }
  return holds(Axiom::kSS5);
}

// SS6 and SS6E quantify over the same instances once the unions are required
// to be domain members.
AxiomReport check_union_triples(const ChoiceFunctionTable& t, Axiom tag) {
  const auto& st = t.structure();
  auto domain = st.domain();
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (std::size_t j = 0; j < domain.size(); ++j) {
      auto u12 = st.domain_index(domain[i] | domain[j]);
      if (!u12) continue;
      const AltSet s3 = t.at(*u12);
      auto u13 = st.domain_index(domain[i] | s3);
      if (u13 && t.at(*u13) != s3) {
        return violated(tag, {domain[i], domain[j], s3});
      }
    }
  }
  return holds(tag);
}

AxiomReport check_ss5e(const ChoiceFunctionTable& t) {
  auto domain = t.structure().domain();
  const auto img = image_of(t);
  std::vector<std::vector<std::size_t>> adj(img.size());
  // witness[x * n + y]: first domain member W with table(W) == img[x] and
  // img[x] | img[y] inside W.
  std::vector<std::optional<AltSet>> edge_witness(img.size() * img.size());
  for (std::size_t w = 0; w < domain.size(); ++w) {
    const std::size_t x = image_index(img, t.at(w));
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (x == y || !(img[x] | img[y]).subset_of(domain[w])) continue;
      auto& slot = edge_witness[x * img.size() + y];
      if (!slot) slot = domain[w];
    }
  }
  for (std::size_t x = 0; x < img.size(); ++x) {
    for (std::size_t y = 0; y < img.size(); ++y) {
      if (edge_witness[x * img.size() + y]) adj[x].push_back(y);
    }
  }
  if (auto cycle = find_cycle(adj)) {
    std::vector<AltSet> w;
    const auto& c = *cycle;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto x = c[k];
      const auto y = c[(k + 1) % c.size()];
      w.push_back(img[x]);
      w.push_back(*edge_witness[x * img.size() + y]);
    }
    return violated(Axiom::kSS5E, std::move(w));
  }
  return holds(Axiom::kSS5E);
}

}  // namespace

std::string_view to_string(Axiom a) {
  for (auto [ax, name] : kNames) {
    if (ax == a) return name;
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (auto [ax, n] : kNames) {
    if (n == name) return ax;
  }
  return std::nullopt;
}

std::span<const Axiom> suite_axioms(Suite suite) {
  if (suite == Suite::kUnionClosed) return kUnionClosedSuite;
  return kGeneralSuite;
}

AxiomReport check_ss(const ChoiceFunctionTable& table, Axiom axiom) {
  switch (axiom) {
    case Axiom::kSS0: return check_ss0(table);
    case Axiom::kSS1: return check_ss1(table);
    case Axiom::kSS2: return check_ss2(table);
    case Axiom::kSS3: return check_ss3(table);
    case Axiom::kSS4: return check_ss4(table);
    case Axiom::kSS5: return check_ss5(table);
    case Axiom::kSS6: return check_union_triples(table, Axiom::kSS6);
    default: break;
  }
  throw std::invalid_argument("check_ss: " + std::string(to_string(axiom)) +
                              " is not one of SS0..SS6");
}

AxiomReport check_ss_e(const ChoiceFunctionTable& table, Axiom axiom) {
  if (axiom == Axiom::kSS5E) return check_ss5e(table);
  if (axiom == Axiom::kSS6E) return check_union_triples(table, Axiom::kSS6E);
  throw std::invalid_argument("check_ss_e: " + std::string(to_string(axiom)) +
                              " is not SS5E or SS6E");
}

AxiomReport check_axiom(const ChoiceFunctionTable& table, Axiom axiom) {
  if (axiom == Axiom::kSS5E || axiom == Axiom::kSS6E) {
    return check_ss_e(table, axiom);
  }
  return check_ss(table, axiom);
}

std::vector<AxiomReport> check_suite(const ChoiceFunctionTable& table,
                                     Suite suite) {
  std::vector<AxiomReport> out;
  for (auto a : suite_axioms(suite)) out.push_back(check_axiom(table, a));
  return out;
}

bool satisfies_suite(const ChoiceFunctionTable& table, Suite suite) {
  for (auto a : suite_axioms(suite)) {
    if (!check_axiom(table, a).holds) return false;
  }
  return true;
}

bool all_hold(std::span<const AxiomReport> reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.holds; });
}

std::optional<AxiomReport> first_violation(
    std::span<const AxiomReport> reports) {
  for (const auto& r : reports) {
    if (!r.holds) return r;
  }
  return std::nullopt;
}

bool replay(const ChoiceFunctionTable& t, const AxiomReport& report) {
  const auto& st = t.structure();
  const auto& w = report.witness;
  const AltSet k = t.fallback();
  auto in = [&](AltSet s) { return st.in_domain(s); };
  auto f = [&](AltSet s) { return t(s); };
  auto all_in = [&] { return std::all_of(w.begin(), w.end(), in); };

  switch (report.axiom) {
    case Axiom::kSS0:
      return w.size() == 1 && all_in() && st.has_realizable_subset(w[0]) &&
             !f(w[0]).subset_of(w[0]);
    case Axiom::kSS1:
      return w.size() == 1 && all_in() && !f(w[0]).subset_of(w[0]) &&
             f(w[0]) != k;
    case Axiom::kSS2:
      return w.size() == 1 && all_in() && k.subset_of(w[0]) && f(w[0]) != k;
    case Axiom::kSS3:
      return w.size() == 2 && all_in() && f(w[0]).subset_of(w[1]) &&
             f(w[1]).subset_of(w[0]) && f(w[0]) != f(w[1]);
    case Axiom::kSS4:
      return w.size() == 2 && all_in() && f(w[0]).subset_of(w[0]) &&
             w[0].subset_of(w[1]) && !f(w[1]).subset_of(w[1]);
    case Axiom::kSS5: {
      // Premise for i < n, then S0 != Sn and table(Sn | S0) == Sn.
      if (w.size() < 2 || !all_in()) return false;
      const std::size_t n = w.size() - 1;
      for (std::size_t i = 0; i < n; ++i) {
        if (!in(w[i] | w[i + 1]) || f(w[i] | w[i + 1]) != w[i]) return false;
      }
      return w[0] != w[n] && in(w[n] | w[0]) && f(w[n] | w[0]) == w[n];
    }
    case Axiom::kSS5E: {
      if (w.size() < 4 || w.size() % 2 != 0 || !all_in()) return false;
      const std::size_t m = w.size() / 2;  // sets S0..S(m-1)
      auto s = [&](std::size_t i) { return w[2 * i]; };
      auto between = [&](std::size_t i) { return w[2 * i + 1]; };
      for (std::size_t i = 0; i + 1 < m; ++i) {
        if (!(s(i) | s(i + 1)).subset_of(between(i)) ||
            f(between(i)) != s(i)) {
          return false;
        }
      }
      const std::size_t n = m - 1;
      return (s(n) | s(0)).subset_of(between(n)) && s(n) != s(0) &&
             f(between(n)) == s(n);
    }
    case Axiom::kSS6:
    case Axiom::kSS6E: {
      if (w.size() != 3 || !all_in()) return false;
      const AltSet u12 = w[0] | w[1];
      const AltSet u13 = w[0] | w[2];
      return in(u12) && in(u13) && f(u12) == w[2] && f(u13) != w[2];
    }
    default:
      break;
  }
  throw std::invalid_argument("replay: unsupported axiom " +
                              std::string(to_string(report.axiom)));
}

Axiom as_lcr(Axiom ss) {
  switch (ss) {
    case Axiom::kSS1: return Axiom::kLCR1;
    case Axiom::kSS2: return Axiom::kLCR2;
    case Axiom::kSS3: return Axiom::kLCR3;
    case Axiom::kSS4: return Axiom::kLCR4;
    case Axiom::kSS5: return Axiom::kLCR5;
    case Axiom::kSS6: return Axiom::kLCR6;
    default: break;
  }
  throw std::invalid_argument("no LCR counterpart for " +
                              std::string(to_string(ss)));
}

Axiom as_lca(Axiom ss) {
  switch (ss) {
    case Axiom::kSS1: return Axiom::kLCA1;
    case Axiom::kSS2: return Axiom::kLCA2;
    case Axiom::kSS3: return Axiom::kLCA3;
    case Axiom::kSS4: return Axiom::kLCA4;
    case Axiom::kSS5: return Axiom::kLCA5;
    case Axiom::kSS6: return Axiom::kLCA6;
    default: break;
  }
  throw std::invalid_argument("no LCA counterpart for " +
                              std::string(to_string(ss)));
}

Axiom underlying_ss(Axiom a) {
  switch (a) {
    case Axiom::kLCR1: case Axiom::kLCA1: return Axiom::kSS1;
    case Axiom::kLCR2: case Axiom::kLCA2: return Axiom::kSS2;
    case Axiom::kLCR3: case Axiom::kLCA3: return Axiom::kSS3;
    case Axiom::kLCR4: case Axiom::kLCA4: return Axiom::kSS4;
    case Axiom::kLCR5: case Axiom::kLCA5: return Axiom::kSS5;
    case Axiom::kLCR6: case Axiom::kLCA6: return Axiom::kSS6;
    default: return a;
  }
}

}  // namespace linchoice
