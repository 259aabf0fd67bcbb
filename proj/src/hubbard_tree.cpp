#include "kneading/hubbard_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "kneading/errors.hpp"

namespace kneading {

std::string MarkedPoint::name() const {
  switch (role) {
    case PointRole::critical_orbit: return "c" + std::to_string(index);
    case PointRole::periodic_branch: return "z" + std::to_string(period) + "_" + std::to_string(index);
    case PointRole::preperiodic_branch: return "y" + std::to_string(index);
  }
  return "?";
}

Itinerary critical_orbit_itinerary(const KneadingSequence& nu, std::size_t k) {
  const std::size_t n = nu.period();
  return Itinerary::of(nu).shift((k % n + n - 1) % n);
}

Itinerary closest_precritical(const KneadingSequence& nu, std::size_t k) {
  if (k == 0 || k > nu.period()) throw DomainError("closest precritical index out of range");
  const Word& w = nu.period_word();
  Word pre(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k - 1));
  Word per{Symbol::star};
  per.insert(per.end(), w.begin(), w.end() - 1);
  return Itinerary(std::move(pre), std::move(per));
}

std::vector<MarkedPoint> marked_points(const KneadingSequence& nu) {
  if (!nu.is_star_periodic()) throw DomainError("marked points need a star-periodic sequence");
  std::vector<MarkedPoint> pts;
  for (std::size_t k = 0; k < nu.period(); ++k)
    pts.push_back({critical_orbit_itinerary(nu, k), PointRole::critical_orbit, nu.period(), k});
  for (const auto& entry : branch_spectrum(nu)) {
    for (std::size_t j = 0; j < entry.period; ++j)
      pts.push_back({entry.characteristic_itinerary.shift(j), PointRole::periodic_branch, entry.period, j});
  }
  return pts;
}

// ---------------------------------------------------------------------------
// HubbardTree helpers

std::optional<VertexId> HubbardTree::find(const Itinerary& it) const {
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (vertices[v].itinerary == it) return v;
  }
  return std::nullopt;
}

std::vector<std::vector<VertexId>> HubbardTree::adjacency() const {
  std::vector<std::vector<VertexId>> adj(vertices.size());
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

std::size_t HubbardTree::degree(VertexId v) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const auto& e) { return e.first == v || e.second == v; }));
}

std::vector<VertexId> HubbardTree::endpoints() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertices.size(); ++v) {
    if (degree(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> HubbardTree::path(VertexId from, VertexId to) const {
  const auto adj = adjacency();
  std::vector<VertexId> parent(vertices.size(), vertices.size());
  std::queue<VertexId> queue;
  parent[from] = from;
  queue.push(from);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    for (VertexId w : adj[v]) {
      if (parent[w] == vertices.size()) {
        parent[w] = v;
        queue.push(w);
      }
    }
  }
  if (parent[to] == vertices.size()) return {};
  std::vector<VertexId> out{to};
  while (out.back() != from) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

VertexId HubbardTree::toward(VertexId from, VertexId to) const {
  if (from == to) throw DomainError("no direction from a vertex to itself");
  const auto p = path(from, to);
  if (p.size() < 2) throw StructuralError("vertices " + vertices[from].name() + " and " + vertices[to].name() + " are not connected");
  return p[1];
}

// ---------------------------------------------------------------------------
// build_tree

namespace {

using Triple = std::array<std::size_t, 3>;

struct Discovery {
  std::vector<MarkedPoint> points;
  std::unordered_map<Itinerary, std::size_t> index;
  std::map<Triple, TriodResult> triods;

  bool add(MarkedPoint p) {
    if (index.contains(p.itinerary)) return false;
    index.emplace(p.itinerary, points.size());
    points.push_back(std::move(p));
    return true;
  }
};

TriodResult classify_or_throw(const Discovery& d, const Triple& t, const KneadingSequence& nu) {
  try {
    return triod_classify(d.points[t[0]].itinerary, d.points[t[1]].itinerary, d.points[t[2]].itinerary, nu);
  } catch (const TriodError& e) {
    throw StructuralError("inconsistent triod {" + d.points[t[0]].name() + ", " + d.points[t[1]].name() + ", " +
                          d.points[t[2]].name() + "} for " + nu.str() + ": " + e.what());
  }
}

// Label periodic branch points discovered without seeding: index 0 goes to
// the orbit point that agrees with nu for a full period, if there is one.
void label_discovered_orbits(std::vector<MarkedPoint>& pts, const KneadingSequence& nu) {
  std::set<std::string> done;
  for (auto& p : pts) {
    if (p.role != PointRole::periodic_branch || p.period != 0 || done.contains(p.itinerary.str())) continue;
    const std::size_t m = p.itinerary.period();
    std::vector<Itinerary> orbit;
    for (std::size_t j = 0; j < m; ++j) orbit.push_back(p.itinerary.shift(j));
    std::size_t start = 0;
    const Word nu_prefix = Itinerary::of(nu).prefix(m);
    auto match = std::find_if(orbit.begin(), orbit.end(), [&](const Itinerary& it) { return it.prefix(m) == nu_prefix; });
    if (match != orbit.end()) {
      start = static_cast<std::size_t>(match - orbit.begin());
    } else {
      start = static_cast<std::size_t>(std::min_element(orbit.begin(), orbit.end()) - orbit.begin());
    }
    for (std::size_t j = 0; j < m; ++j) {
      const auto& it = orbit[(start + j) % m];
      for (auto& q : pts) {
        if (q.itinerary == it) {
          q.period = m;
          q.index = j;
        }
      }
      done.insert(it.str());
    }
  }
}

}  // namespace

HubbardTree build_tree(const KneadingSequence& nu, TreeBuildOptions options) {
  if (!nu.is_star_periodic()) throw DomainError("Hubbard trees are built for star-periodic sequences");
  Discovery d;
  for (auto& p : marked_points(nu)) {
    if (options.seed_spectrum || p.role == PointRole::critical_orbit) d.add(std::move(p));
  }

  // Branch points of the hull are exactly the centres of triples; adding
  // them and their forward orbits can only reveal further images.
  for (std::size_t round = 0;; ++round) {
    if (round > d.points.size() + 1) throw StructuralError("branch point discovery does not stabilise for " + nu.str());
    std::vector<Itinerary> found;
    const std::size_t count = d.points.size();
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = a + 1; b < count; ++b) {
        for (std::size_t c = b + 1; c < count; ++c) {
          const Triple t{a, b, c};
          auto it = d.triods.find(t);
          if (it == d.triods.end()) it = d.triods.emplace(t, classify_or_throw(d, t, nu)).first;
          if (it->second.is_branch()) found.push_back(it->second.branch_itinerary);
        }
      }
    }
    bool grew = false;
    for (const auto& it : found) {
      Itinerary cur = it;
      while (!d.index.contains(cur)) {
        if (cur.contains_star()) throw StructuralError("branch itinerary " + cur.str() + " contains the critical point");
        const bool periodic = cur.is_periodic();
        d.add({cur, periodic ? PointRole::periodic_branch : PointRole::preperiodic_branch, 0, 0});
        grew = true;
        cur = cur.shift();
      }
    }
    if (!grew) break;
  }

  label_discovered_orbits(d.points, nu);

  // Canonical vertex order: critical orbit, periodic orbits, preperiodic points.
  std::vector<std::size_t> order(d.points.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    const auto& p = d.points[i];
    const std::size_t rank = static_cast<std::size_t>(p.role);
    const std::size_t major = p.role == PointRole::preperiodic_branch ? p.itinerary.preperiod().size() : p.period;
    const std::size_t minor = p.role == PointRole::preperiodic_branch ? 0 : p.index;
    return std::make_tuple(rank, major, minor, p.itinerary.str());
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  HubbardTree tree{nu, {}, {}, {}, 0};
  std::vector<VertexId> new_id(order.size());
  std::size_t preperiodic_ordinal = 0;
  for (VertexId v = 0; v < order.size(); ++v) {
    new_id[order[v]] = v;
    MarkedPoint p = d.points[order[v]];
    if (p.role == PointRole::preperiodic_branch) p.index = preperiodic_ordinal++;
    tree.vertices.push_back(std::move(p));
  }

  const std::size_t size = tree.vertices.size();
  std::vector<std::vector<bool>> separated(size, std::vector<bool>(size, false));
  for (const auto& [t, result] : d.triods) {
    if (!result.is_middle()) continue;
    const VertexId x = new_id[t[(result.middle_slot + 1) % 3]];
    const VertexId y = new_id[t[(result.middle_slot + 2) % 3]];
    separated[x][y] = separated[y][x] = true;
  }
  for (VertexId a = 0; a < size; ++a) {
    for (VertexId b = a + 1; b < size; ++b) {
      if (!separated[a][b]) tree.edges.emplace_back(a, b);
    }
  }

  tree.dynamics.resize(size);
  for (VertexId v = 0; v < size; ++v) {
    const auto image = tree.find(tree.vertices[v].itinerary.shift());
    if (!image) throw StructuralError("image of " + tree.vertices[v].name() + " is not a marked point");
    tree.dynamics[v] = *image;
  }
  tree.critical = *tree.find(critical_orbit_itinerary(nu, 0));

  if (tree.edges.size() + 1 != size || tree.path(0, size - 1).empty()) {
    std::ostringstream msg;
    msg << "adjacency of " << nu.str() << " is not a tree (" << size << " vertices, " << tree.edges.size() << " edges)";
    throw StructuralError(msg.str());
  }
  for (VertexId v = 0; v < size; ++v) {
    if (tree.path(0, v).empty()) throw StructuralError("adjacency of " + nu.str() + " is disconnected");
  }
  return tree;
}

// ---------------------------------------------------------------------------
// Axioms

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

bool is_connected_tree(const HubbardTree& t) {
  if (t.size() == 0 || t.edges.size() + 1 != t.size()) return false;
  const auto adj = t.adjacency();
  std::vector<bool> seen(t.size(), false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == t.size();
}

// Iterate two itineraries in lockstep until their heads differ or one of them
// sits on the critical point.
bool separates(const Itinerary& x, const Itinerary& y) {
  const std::size_t bound = x.preperiod().size() + y.preperiod().size() + x.period() * y.period() + 1;
  for (std::size_t i = 0; i < bound; ++i) {
    const Symbol a = x.at(i), b = y.at(i);
    if (a != b || a == Symbol::star) return true;
  }
  return false;
}

std::optional<std::size_t> orbit_period(const HubbardTree& t, VertexId v) {
  VertexId cur = v;
  for (std::size_t k = 1; k <= t.size(); ++k) {
    cur = t.dynamics[cur];
    if (cur == v) return k;
  }
  return std::nullopt;
}

}  // namespace

AxiomReport verify_axioms(const HubbardTree& t) {
  AxiomReport report;
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const std::size_t n = t.nu.period();
  const bool tree_ok = is_connected_tree(t);
  add("tree", tree_ok, tree_ok ? "" : "edge set is not a spanning tree");

  bool dyn_ok = t.dynamics.size() == t.size() && t.critical < t.size();
  for (VertexId v = 0; dyn_ok && v < t.size(); ++v) {
    dyn_ok = t.dynamics[v] < t.size() && t.vertices[t.dynamics[v]].itinerary == t.vertices[v].itinerary.shift();
  }
  add("dynamics", dyn_ok, dyn_ok ? "" : "dynamics does not act as the shift on itineraries");
  if (!dyn_ok) return report;

  const VertexId c0 = t.critical;
  const VertexId c1 = t.critical_value();

  {
    std::string bad;
    for (VertexId v : t.endpoints()) {
      if (t.vertices[v].role != PointRole::critical_orbit) bad += t.vertices[v].name() + " ";
    }
    add("endpoints_on_critical_orbit", bad.empty(), bad);
  }
  add("critical_value_is_endpoint", t.degree(c1) == 1, "degree(c1) = " + std::to_string(t.degree(c1)));
  add("critical_point_degree", t.degree(c0) <= 2, "degree(c0) = " + std::to_string(t.degree(c0)));

  {
    std::set<std::string> seen;
    bool distinct = true;
    for (const auto& p : t.vertices) distinct = seen.insert(p.itinerary.str()).second && distinct;
    add("distinct_itineraries", distinct);
  }

  {
    std::vector<std::size_t> preimages(t.size(), 0);
    for (VertexId v = 0; v < t.size(); ++v) ++preimages[t.dynamics[v]];
    std::string bad;
    for (VertexId v = 0; v < t.size(); ++v) {
      if (preimages[v] > 2) bad += t.vertices[v].name() + " ";
    }
    add("at_most_two_preimages", bad.empty(), bad);
  }

  {
    std::string bad;
    for (VertexId x = 0; x < t.size(); ++x) {
      for (VertexId y = x + 1; y < t.size(); ++y) {
        if (!separates(t.vertices[x].itinerary, t.vertices[y].itinerary))
          bad += t.vertices[x].name() + "/" + t.vertices[y].name() + " ";
      }
    }
    add("expansivity", bad.empty(), bad);
  }

  {
    std::string bad;
    std::size_t max_period = 0;
    for (VertexId v = 0; v < t.size(); ++v) {
      const auto& p = t.vertices[v];
      if (p.role == PointRole::critical_orbit) continue;
      const auto period = orbit_period(t, v);
      if (!period) continue;
      max_period = std::max(max_period, *period);
      if (tree_ok && t.degree(t.dynamics[v]) != t.degree(v)) bad += p.name() + " ";
    }
    add("branch_degree_constant_on_cycles", tree_ok && bad.empty(), tree_ok ? bad : "requires a tree");
    add("branch_period_below_critical_period", max_period < n,
        "max branch period " + std::to_string(max_period) + ", critical period " + std::to_string(n));
  }

  if (!tree_ok) {
    add("local_homeomorphism", false, "requires a tree");
    add("surjectivity", false, "requires a tree");
    return report;
  }

  const auto adj = t.adjacency();
  {
    std::string bad;
    for (VertexId v = 0; v < t.size(); ++v) {
      if (v == c0) continue;
      std::set<VertexId> images;
      for (VertexId w : adj[v]) {
        if (t.dynamics[w] == t.dynamics[v]) {
          bad += t.vertices[v].name() + " ";
          break;
        }
        images.insert(t.toward(t.dynamics[v], t.dynamics[w]));
      }
      if (images.size() != adj[v].size() && bad.find(t.vertices[v].name()) == std::string::npos)
        bad += t.vertices[v].name() + " ";
    }
    add("local_homeomorphism", bad.empty(), bad);
  }

  {
    std::set<std::pair<VertexId, VertexId>> covered;
    for (const auto& [a, b] : t.edges) {
      const auto p = t.path(t.dynamics[a], t.dynamics[b]);
      for (std::size_t i = 0; i + 1 < p.size(); ++i) covered.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
    }
    add("surjectivity", covered.size() == t.edges.size(),
        std::to_string(covered.size()) + " of " + std::to_string(t.edges.size()) + " edges covered");
  }
  return report;
}

// ---------------------------------------------------------------------------
// Characteristic points and arm dynamics

VertexId characteristic_point(const HubbardTree& t, const std::vector<VertexId>& orbit) {
  if (orbit.empty()) throw DomainError("empty orbit");
  const VertexId c0 = t.critical, c1 = t.critical_value();
  std::vector<VertexId> found;
  for (VertexId z : orbit) {
    if (z == c0 || z == c1) throw DomainError("orbit contains a critical-orbit endpoint");
    const VertexId to_value = t.toward(z, c1);
    const VertexId to_critical = t.toward(z, c0);
    if (to_value == to_critical) continue;
    const bool rest_with_critical = std::all_of(orbit.begin(), orbit.end(), [&](VertexId o) {
      return o == z || t.toward(z, o) == to_critical;
    });
    if (rest_with_critical) found.push_back(z);
  }
  if (found.size() != 1)
    throw StructuralError("orbit of " + t.vertices[orbit.front()].name() + " has " + std::to_string(found.size()) +
                          " characteristic candidates");
  const VertexId z = found.front();
  const std::size_t m = orbit.size();
  if (t.vertices[z].itinerary.prefix(m) != Itinerary::of(t.nu).prefix(m))
    throw StructuralError("characteristic point " + t.vertices[z].name() + " does not follow nu for a full period");
  return z;
}

std::vector<std::vector<std::size_t>> ArmPermutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      cycle.push_back(j);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

ArmPermutation arm_permutation(const HubbardTree& t, VertexId z, std::size_t period) {
  ArmPermutation perm;
  perm.z = z;
  perm.period = period;
  perm.arms = t.adjacency()[z];
  const std::size_t q = perm.arms.size();
  perm.arm_to_critical = static_cast<std::size_t>(
      std::find(perm.arms.begin(), perm.arms.end(), t.toward(z, t.critical)) - perm.arms.begin());

  for (VertexId arm : perm.arms) {
    VertexId at = z, dir = arm;
    for (std::size_t step = 0; step < period; ++step) {
      if (at == t.critical) throw StructuralError("periodic orbit of " + t.vertices[z].name() + " meets c0");
      const VertexId next = t.dynamics[at];
      dir = t.toward(next, t.dynamics[dir]);
      at = next;
    }
    if (at != z) throw StructuralError(t.vertices[z].name() + " does not return after " + std::to_string(period) + " steps");
    perm.image.push_back(static_cast<std::size_t>(std::find(perm.arms.begin(), perm.arms.end(), dir) - perm.arms.begin()));
  }

  const auto cyc = perm.cycles();
  if (cyc.size() == 1 && cyc.front().size() == q) {
    perm.type = OrbitType::tame;
  } else if (cyc.size() == 2 && perm.image[perm.arm_to_critical] == perm.arm_to_critical) {
    perm.type = OrbitType::evil;
  } else {
    throw StructuralError("first-return map at " + t.vertices[z].name() + " is neither transitive nor fixes only the arm to c0");
  }
  return perm;
}

std::vector<ObservedOrbit> observe_branch_orbits(const HubbardTree& t) {
  std::vector<ObservedOrbit> out;
  std::vector<bool> done(t.size(), false);
  for (VertexId v = 0; v < t.size(); ++v) {
    if (done[v] || t.vertices[v].role == PointRole::critical_orbit) continue;
    const auto period = orbit_period(t, v);
    if (!period) continue;
    std::vector<VertexId> orbit;
    for (VertexId cur = v; orbit.size() < *period; cur = t.dynamics[cur]) {
      orbit.push_back(cur);
      done[cur] = true;
    }
    if (t.degree(v) < 3) continue;

    ObservedOrbit o;
    o.period = *period;
    o.arms = t.degree(v);
    o.characteristic = characteristic_point(t, orbit);
    for (VertexId cur = o.characteristic; o.orbit.size() < o.period; cur = t.dynamics[cur]) o.orbit.push_back(cur);
    o.permutation = arm_permutation(t, o.characteristic, o.period);
    o.type = o.permutation.type;
    out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.period < b.period; });
  return out;
}

std::vector<ObservedOrbit> classify_orbits(const HubbardTree& t) {
  auto observed = observe_branch_orbits(t);
  const auto predicted = branch_spectrum(t.nu);
  auto describe = [](std::size_t m, std::size_t q, OrbitType type) {
    return "{period " + std::to_string(m) + ", " + std::to_string(q) + " arms, " + to_string(type) + "}";
  };
  std::string mismatch;
  if (observed.size() != predicted.size()) {
    mismatch = "tree has " + std::to_string(observed.size()) + " periodic branch orbits, symbolic prediction " +
               std::to_string(predicted.size());
  }
  for (std::size_t i = 0; mismatch.empty() && i < observed.size(); ++i) {
    const auto& o = observed[i];
    const auto& p = predicted[i];
    if (o.period != p.period || o.arms != p.arms || o.type != p.type) {
      mismatch = "observed " + describe(o.period, o.arms, o.type) + " vs predicted " + describe(p.period, p.arms, p.type);
    } else if (t.vertices[o.characteristic].itinerary != p.characteristic_itinerary) {
      mismatch = "characteristic itinerary " + t.vertices[o.characteristic].itinerary.str() + " vs predicted " +
                 p.characteristic_itinerary.str();
    }
  }
  if (!mismatch.empty()) throw CrossCheckError("branch spectrum mismatch for " + t.nu.str() + ": " + mismatch);
  return observed;
}

}  // namespace kneading
