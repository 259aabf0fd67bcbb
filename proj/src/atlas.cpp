#include "kneading/atlas.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "kneading/errors.hpp"
#include "kneading/rho.hpp"

namespace kneading {

KneadingSequence parse_input(std::string_view text) {
  if (text.find('-') != std::string_view::npos) return address_to_sequence(InternalAddress::parse(text));
  auto nu = KneadingSequence::parse(text);
  if (!nu.is_star_periodic()) throw ParseError("expected a star-periodic sequence such as 10110*: " + std::string(text));
  return nu;
}

namespace {

std::string role_name(PointRole role) {
  switch (role) {
    case PointRole::critical_orbit: return "critical_orbit";
    case PointRole::periodic_branch: return "periodic_branch";
    case PointRole::preperiodic_branch: return "preperiodic_branch";
  }
  return "?";
}

SpectrumSummary summarize(const HubbardTree& tree, const ObservedOrbit& o) {
  SpectrumSummary s;
  s.period = o.period;
  s.arms = o.arms;
  s.type = o.type;
  s.characteristic = tree.vertices[o.characteristic].name();
  s.characteristic_itinerary = tree.vertices[o.characteristic].itinerary.str();
  const auto& perm = o.permutation;
  s.arm_toward_critical = tree.vertices[perm.arms[perm.arm_to_critical]].name();
  for (const auto& cycle : perm.cycles()) {
    std::vector<std::string> names;
    for (std::size_t arm : cycle) names.push_back(tree.vertices[perm.arms[arm]].name());
    s.cycles.push_back(std::move(names));
  }
  return s;
}

void cross_check(const KneadingSequence& nu, bool condition, const std::string& what) {
  if (!condition) throw CrossCheckError(nu.str() + ": " + what);
}

}  // namespace

Analysis analyze(const KneadingSequence& nu) {
  if (!nu.is_star_periodic()) throw DomainError("analysis needs a star-periodic sequence");
  Analysis a{build_tree(nu), {}, {}};

  const auto report = verify_axioms(a.tree);
  for (const auto& check : report.checks)
    cross_check(nu, check.passed, "tree fails " + check.name + (check.detail.empty() ? "" : " (" + check.detail + ")"));
  a.orbits = classify_orbits(a.tree);

  const std::string serialized = to_json(a.tree).dump();
  cross_check(nu, to_json(build_tree(nu, {.seed_spectrum = false})).dump() == serialized,
              "tree built from the critical orbit alone differs from the seeded tree");

  AtlasRow& row = a.row;
  row.sequence = nu.str();
  row.period = nu.period();
  row.internal_address = internal_address(nu).str();
  row.admissible = is_admissible(nu);
  row.failing_periods = failing_periods(nu);
  for (std::size_t m : row.failing_periods) row.diagnostics.push_back(fails_for_period(nu, m));
  for (const auto& o : a.orbits) row.spectrum.push_back(summarize(a.tree, o));
  row.embeddings = count_embeddings(a.tree);
  row.tree_hash = sha256_hex(serialized);

  const bool no_evil = std::none_of(a.orbits.begin(), a.orbits.end(), [](const auto& o) { return o.type == OrbitType::evil; });
  cross_check(nu, row.admissible == row.failing_periods.empty(), "admissibility disagrees with failing periods");
  cross_check(nu, row.admissible == no_evil, "admissibility disagrees with evil orbit detection");
  cross_check(nu, row.admissible == (row.embeddings >= 1), "admissibility disagrees with the embedding count");
  return a;
}

Json to_json(const FailureDiagnostic& d) {
  Json j;
  j["m"] = d.m;
  j["cond1"] = d.cond1;
  j["cond2"] = d.cond2;
  j["cond3"] = d.cond3;
  j["fails"] = d.fails;
  j["rho_m"] = d.rho_m ? Json(*d.rho_m) : Json(nullptr);
  j["r"] = d.r;
  return j;
}

Json to_json(const HubbardTree& tree) {
  Json j;
  j["sequence"] = tree.nu.str();
  Json vertices = Json::array();
  for (VertexId v = 0; v < tree.size(); ++v) {
    const auto& p = tree.vertices[v];
    vertices.push_back({{"id", v}, {"name", p.name()}, {"role", role_name(p.role)}, {"itinerary", p.itinerary.str()}});
  }
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& [a, b] : tree.edges) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  j["dynamics"] = tree.dynamics;
  j["critical"] = tree.critical;
  return j;
}

Json to_json(const EmbeddedTree& e) {
  Json j = to_json(e.tree);
  j["cyclic_order"] = e.cyclic_order;
  return j;
}

Json to_json(const AtlasRow& row) {
  Json j;
  j["sequence"] = row.sequence;
  j["period"] = row.period;
  j["internal_address"] = row.internal_address;
  j["admissible"] = row.admissible;
  j["failing_periods"] = row.failing_periods;
  Json diag = Json::array();
  for (const auto& d : row.diagnostics) diag.push_back(to_json(d));
  j["diagnostics"] = std::move(diag);
  Json spectrum = Json::array();
  for (const auto& s : row.spectrum) {
    spectrum.push_back({{"period", s.period},
                        {"arms", s.arms},
                        {"type", to_string(s.type)},
                        {"characteristic", s.characteristic},
                        {"itinerary", s.characteristic_itinerary},
                        {"arm_toward_c0", s.arm_toward_critical},
                        {"cycles", s.cycles}});
  }
  j["spectrum"] = std::move(spectrum);
  j["embeddings"] = row.embeddings;
  j["tree_hash"] = row.tree_hash;
  return j;
}

namespace {

std::string dot_graph(const HubbardTree& tree, const std::vector<std::string>& extra_labels) {
  std::ostringstream out;
  out << "graph \"" << tree.nu.str() << "\" {\n";
  for (VertexId v = 0; v < tree.size(); ++v) {
    const auto& p = tree.vertices[v];
    const char* shape = p.role == PointRole::critical_orbit ? "circle" : p.role == PointRole::periodic_branch ? "box" : "diamond";
    out << "  " << p.name() << " [shape=" << shape << ", label=\"" << p.name() << "\\n" << p.itinerary.str();
    if (!extra_labels.empty() && !extra_labels[v].empty()) out << "\\n" << extra_labels[v];
    out << "\"];\n";
  }
  for (const auto& [a, b] : tree.edges) out << "  " << tree.vertices[a].name() << " -- " << tree.vertices[b].name() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string to_dot(const HubbardTree& tree) { return dot_graph(tree, {}); }

std::string to_dot(const EmbeddedTree& e) {
  std::vector<std::string> labels;
  for (VertexId v = 0; v < e.tree.size(); ++v) {
    std::string label;
    if (e.cyclic_order[v].size() >= 3) {
      label = "(";
      for (VertexId w : e.cyclic_order[v]) label += (label.size() > 1 ? " " : "") + e.tree.vertices[w].name();
      label += ")";
    }
    labels.push_back(std::move(label));
  }
  return dot_graph(e.tree, labels);
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string tree_hash(const HubbardTree& tree) { return sha256_hex(to_json(tree).dump()); }

std::vector<KneadingSequence> star_periodic_sequences(std::size_t max_period, bool exact) {
  if (max_period < 2 || max_period > kMaxEnumeratePeriod)
    throw DomainError("period bound must lie in 2.." + std::to_string(kMaxEnumeratePeriod));
  std::vector<KneadingSequence> out;
  for (std::size_t n = exact ? max_period : 2; n <= max_period; ++n) {
    // nu_1 = 1 and nu_n = STAR; the n-2 symbols between count up in binary.
    const std::size_t free = n - 2;
    for (std::size_t bits = 0; bits < (std::size_t{1} << free); ++bits) {
      Word w{Symbol::one};
      for (std::size_t i = free; i-- > 0;) w.push_back((bits >> i) & 1 ? Symbol::one : Symbol::zero);
      w.push_back(Symbol::star);
      out.push_back(KneadingSequence::star_periodic(std::move(w)));
    }
  }
  return out;
}

Json atlas_header(std::size_t max_period, bool exact) {
  Json j;
  j["tool"] = kToolVersion;
  j["scan_bound"] = max_period;
  j["exact"] = exact;
  return j;
}

void enumerate(std::size_t max_period, bool exact, std::size_t threads, const std::function<void(const AtlasRow&)>& sink) {
  const auto sequences = star_periodic_sequences(max_period, exact);
  const std::size_t total = sequences.size();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));

  struct Slot {
    std::optional<AtlasRow> row;
    std::exception_ptr error;
    bool ready = false;
  };
  std::vector<Slot> slots(total);
  std::mutex mutex;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};

  auto worker = [&] {
    while (!abort) {
      const std::size_t i = next++;
      if (i >= total) return;
      Slot result;
      try {
        result.row = analyze(sequences[i]).row;
      } catch (...) {
        result.error = std::current_exception();
      }
      result.ready = true;
      {
        std::lock_guard lock(mutex);
        slots[i] = std::move(result);
      }
      cv.notify_all();
    }
  };

  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);

  std::exception_ptr failure;
  for (std::size_t i = 0; i < total && !failure; ++i) {
    Slot slot;
    {
      std::unique_lock lock(mutex);
      cv.wait(lock, [&] { return slots[i].ready; });
      slot = std::move(slots[i]);
    }
    if (slot.error) {
      failure = slot.error;
      abort = true;
      break;
    }
    try {
      sink(*slot.row);
    } catch (...) {
      failure = std::current_exception();
      abort = true;
    }
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kneading
