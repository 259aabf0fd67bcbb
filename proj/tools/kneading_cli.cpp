// kneading: command-line front end for the kneading sequence library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "kneading/atlas.hpp"
#include "kneading/errors.hpp"
#include "kneading/rho.hpp"

namespace {

using namespace kneading;

constexpr int kExitParse = 1;
constexpr int kExitCrossCheck = 2;
constexpr int kExitNotEmbeddable = 3;

std::string render_text(const AtlasRow& row) {
  std::ostringstream out;
  out << "sequence          " << row.sequence << "\n"
      << "period            " << row.period << "\n"
      << "internal address  " << row.internal_address << "\n"
      << "admissible        " << (row.admissible ? "yes" : "no") << "\n"
      << "failing periods   ";
  if (row.failing_periods.empty()) out << "none";
  for (std::size_t i = 0; i < row.failing_periods.size(); ++i) out << (i ? " " : "") << row.failing_periods[i];
  out << "\n";
  for (const auto& d : row.diagnostics) {
    out << "  m=" << d.m << "  cond1=" << d.cond1 << " cond2=" << d.cond2 << " cond3=" << d.cond3 << "\n";
  }
  out << "branch orbits     " << (row.spectrum.empty() ? "none" : "") << "\n";
  for (const auto& s : row.spectrum) {
    out << "  period " << s.period << ", " << s.arms << " arms, " << to_string(s.type) << " at " << s.characteristic << " "
        << s.characteristic_itinerary << "; arms";
    for (const auto& cycle : s.cycles) {
      out << " (";
      for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
      out << ")";
    }
    out << "\n";
  }
  out << "embeddings        " << row.embeddings << "\n"
      << "tree hash         " << row.tree_hash << "\n";
  return out.str();
}

// Writes to --out when given, else stdout.
class Output {
 public:
  explicit Output(const std::string& path, bool append = false) {
    if (path.empty()) return;
    file_.open(path, append ? std::ios::app : std::ios::trunc);
    if (!file_) throw std::runtime_error("cannot open " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kneading sequences, Hubbard trees and their planar embeddings"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string input, out_path;
  bool dot = false, all = false, exact = false, json = false;
  std::size_t period = 0;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());

  auto* analyze_cmd = app.add_subcommand("analyze", "Run the full pipeline on a sequence or internal address");
  analyze_cmd->add_option("input", input, "sequence like 10110* or address like 1-2-4-5-6")->required();
  analyze_cmd->add_flag("--json", json, "print the atlas record instead of a report");
  analyze_cmd->add_option("--out", out_path, "write to FILE");

  auto* tree_cmd = app.add_subcommand("tree", "Print the Hubbard tree");
  tree_cmd->add_option("input", input, "sequence or internal address")->required();
  tree_cmd->add_flag("--dot", dot, "emit Graphviz text");
  tree_cmd->add_option("--out", out_path, "write to FILE");

  auto* embed_cmd = app.add_subcommand("embed", "Print planar embeddings respecting the dynamics");
  embed_cmd->add_option("input", input, "sequence or internal address")->required();
  embed_cmd->add_flag("--all", all, "emit every embedding, not just the first");
  embed_cmd->add_flag("--dot", dot, "emit Graphviz text");
  embed_cmd->add_option("--out", out_path, "write to FILE");

  auto* enum_cmd = app.add_subcommand("enumerate", "Analyze every star-periodic sequence up to a period");
  enum_cmd->add_option("--period", period, "period bound N")->required()->check(CLI::Range(std::size_t{2}, kMaxEnumeratePeriod));
  enum_cmd->add_flag("--exact", exact, "only sequences of period exactly N");
  enum_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--out", out_path, "append the atlas to FILE");

  auto* convert_cmd = app.add_subcommand("convert", "Convert between a sequence and its internal address");
  convert_cmd->add_option("input", input, "sequence or internal address")->required();
  convert_cmd->add_option("--out", out_path, "write to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*analyze_cmd) {
      const auto row = analyze(parse_input(input)).row;
      Output out(out_path);
      out.stream() << (json ? to_json(row).dump() + "\n" : render_text(row));
    } else if (*tree_cmd) {
      const auto tree = build_tree(parse_input(input));
      Output out(out_path);
      out.stream() << (dot ? to_dot(tree) : to_json(tree).dump(2) + "\n");
    } else if (*embed_cmd) {
      const auto nu = parse_input(input);
      const auto tree = build_tree(nu);
      std::vector<EmbeddedTree> embeddings;
      if (all) {
        embeddings = all_embeddings(tree);
      } else {
        std::map<VertexId, std::size_t> rotations;
        for (const auto& o : observe_branch_orbits(tree)) rotations[o.characteristic] = 1;
        embeddings.push_back(generate_embedding(tree, rotations));
      }
      if (embeddings.empty()) generate_embedding(tree, {});  // throws with the evil periods
      Output out(out_path);
      if (dot) {
        for (const auto& e : embeddings) out.stream() << to_dot(e);
      } else {
        Json list = Json::array();
        for (const auto& e : embeddings) list.push_back(to_json(e));
        out.stream() << (all ? list.dump(2) : list.front().dump(2)) << "\n";
      }
    } else if (*enum_cmd) {
      Output out(out_path, true);
      auto& stream = out.stream();
      stream << atlas_header(period, exact).dump() << "\n";
      enumerate(period, exact, threads, [&](const AtlasRow& row) { stream << to_json(row).dump() << "\n"; });
      stream.flush();
    } else if (*convert_cmd) {
      Output out(out_path);
      if (input.find('-') != std::string::npos) {
        out.stream() << address_to_sequence(InternalAddress::parse(input)).str() << "\n";
      } else {
        const auto nu = KneadingSequence::parse(input);
        out.stream() << internal_address(nu).str() << "\n";
        if (nu.is_star_periodic()) {
          const auto ul = upper_lower(nu);
          out.stream() << "upper " << ul.upper.str() << "\nlower " << ul.lower.str() << "\n";
        }
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const EmbeddingError& e) {
    Json err{{"error", "not_embeddable"}, {"message", e.what()}, {"evil_periods", e.evil_periods()}};
    std::cerr << err.dump() << "\n";
    return kExitNotEmbeddable;
  } catch (const CrossCheckError& e) {
    std::cerr << "cross-check violation: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const std::logic_error& e) {
    std::cerr << "cross-check violation: " << e.what() << "\n";
    return kExitCrossCheck;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCrossCheck;
  }
  return 0;
}
