#include "bto/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "bto/arrangement.hpp"
#include "bto/baues.hpp"
#include "bto/coherence.hpp"
#include "bto/enumerate.hpp"
#include "bto/flips.hpp"
#include "bto/omatroid.hpp"
#include "bto/order_io.hpp"

namespace bto::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

// Input problems detected after argument parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string pair_text(const DisjointPair& p) { return p.left.to_string() + " < " + p.right.to_string(); }

std::string weight_text(const WeightVector& w) { return "(" + format_weights(w) + ")"; }

std::string hash_name(const TermOrder& o) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx.bto", static_cast<unsigned long long>(o.hash()));
  return buf;
}

TermOrder load_order(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_order(text);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void require_valid(const TermOrder& o, const std::string& path) {
  const ValidationReport r = validate(o);
  if (!r.ok())
    throw UsageError(path + ": not a boolean term order" +
                     (r.violations.empty() ? std::string() : " (" + r.violations.front().describe() + ")"));
}

// A signature file has lines like `+-0 +`.
bool looks_like_signature(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto space = line.find(' ');
    if (space == std::string::npos || space == 0) return false;
    return line.find_first_not_of("+-0") == space;
  }
  return false;
}

void print_histogram(std::ostream& out, const char* label, const std::map<int, std::uint64_t>& h) {
  for (const auto& [k, c] : h) out << label << ' ' << k << ": " << c << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Boolean term orders: validation, enumeration, coherence, flips, arrangements"};
  app.name("bto");
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  std::string file, cert_file, pair, weights, out_dir;
  int n = 0;
  bool coherent_only = false, count_only = false, all_labelings = false;
  bool check_connected = false, degree_histogram = false, labeled = false, with_coherent = false;
  bool check = false, coherent_above = false, show_counts = false;

  auto* validate_cmd = app.add_subcommand("validate", "check the term order axioms");
  validate_cmd->add_option("FILE", file)->required();

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list or count all term orders on [n]");
  enumerate_cmd->add_option("--n", n)->required()->check(CLI::Range(1, kMaxEnumerationSize));
  enumerate_cmd->add_flag("--coherent-only", coherent_only);
  enumerate_cmd->add_flag("--count-only", count_only);
  enumerate_cmd->add_flag("--all-labelings", all_labelings);
  enumerate_cmd->add_option("--out", out_dir, "write one file per order, named by hash");

  auto* coherence_cmd = app.add_subcommand("coherence", "find a weight vector or a noncoherence certificate");
  coherence_cmd->add_option("FILE", file)->required();

  auto* realize_cmd = app.add_subcommand("realize", "order induced by a weight vector");
  realize_cmd->add_option("--w", weights, "comma-separated positive weights")->required();

  auto* flips_cmd = app.add_subcommand("flips", "primitive pairs, flippable ones marked *");
  flips_cmd->add_option("FILE", file)->required();

  auto* flip_cmd = app.add_subcommand("flip", "flip across a flippable pair");
  flip_cmd->add_option("FILE", file)->required();
  flip_cmd->add_option("--pair", pair, "e.g. 4<1,2")->required();

  auto* flipgraph_cmd = app.add_subcommand("flipgraph", "flip graph on orders of [n]");
  flipgraph_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
  flipgraph_cmd->add_flag("--check-connected", check_connected);
  flipgraph_cmd->add_flag("--degree-histogram", degree_histogram);
  flipgraph_cmd->add_flag("--labeled", labeled, "vertices are labeled orders instead of classes");
  flipgraph_cmd->add_flag("--coherent", with_coherent, "also report the coherent subgraph");

  auto* charpoly_cmd = app.add_subcommand("charpoly", "characteristic polynomial of H_n");
  charpoly_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 8));
  charpoly_cmd->add_flag("--counts", show_counts, "print the point counts behind the result");

  auto* regions_cmd = app.add_subcommand("regions", "number of regions of H_n");
  regions_cmd->add_option("--n", n)->required()->check(CLI::Range(1, 8));

  auto* localize_cmd = app.add_subcommand("localize", "signature of an order on the cocircuits of B_n");
  localize_cmd->add_option("FILE", file, "order, partial order, or signature file")->required();
  localize_cmd->add_flag("--check", check, "test localization and the mu conditions");

  auto* baues_cmd = app.add_subcommand("baues", "partial orders and the refinement poset");
  baues_cmd->add_option("FILE", file)->required();
  baues_cmd->add_flag("--coherent-above", coherent_above, "is the order below only the trivial coherent order?");

  auto* certify_cmd = app.add_subcommand("certify", "produce or verify a noncoherence certificate");
  certify_cmd->add_option("FILE", file)->required();
  certify_cmd->add_option("--verify", cert_file, "certificate file to check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate_cmd) {
      const std::string text = read_text_file(file);
      TermOrder order;
      try {
        order = parse_order(text);
      } catch (const ParseError& e) {
        out << "invalid: " << e.what() << '\n';
        return kNo;
      }
      const ValidationReport r = validate(order);
      if (r.ok()) {
        out << "valid n=" << order.n() << '\n';
        return kOk;
      }
      out << "invalid: " << r.violations.size() << " violation(s)\n";
      for (std::size_t i = 0; i < r.violations.size() && i < 20; ++i) out << "  " << r.violations[i].describe() << '\n';
      return kNo;
    }

    if (*enumerate_cmd) {
      if (count_only && out_dir.empty()) {
        std::uint64_t classes = coherent_only ? count_coherent(n, threads) : count_orders(n, threads).class_count;
        out << "classes=" << classes << " total=" << classes * factorial(n) << '\n';
        return kOk;
      }
      if (n > 6) throw UsageError("listing orders is limited to n <= 6; use --count-only");
      const auto mode = all_labelings ? EnumerationMode::all : EnumerationMode::canonical_only;
      std::vector<TermOrder> orders = enumerate_orders(n, mode, threads);
      if (coherent_only) std::erase_if(orders, [](const TermOrder& o) { return !decide_coherence(o).coherent; });
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const TermOrder& o : orders) {
          std::ofstream f(std::filesystem::path(out_dir) / hash_name(o));
          if (!(f << serialize_order(o))) throw UsageError("cannot write to " + out_dir);
        }
      } else if (!count_only) {
        for (std::size_t i = 0; i < orders.size(); ++i) out << (i ? "\n" : "") << serialize_order(orders[i]);
        if (!orders.empty()) out << '\n';
      }
      const std::uint64_t classes = all_labelings ? orders.size() / factorial(n) : orders.size();
      out << "classes=" << classes << " total=" << classes * factorial(n) << '\n';
      return kOk;
    }

    if (*coherence_cmd) {
      const TermOrder order = load_order(file);
      require_valid(order, file);
      const CoherenceResult r = decide_coherence(order);
      if (r.coherent) {
        out << "coherent w=" << weight_text(r.weights) << '\n';
        return kOk;
      }
      out << "incoherent\n" << format_certificate(r.certificate);
      return kNo;
    }

    if (*realize_cmd) {
      WeightVector w;
      try {
        w = parse_weights(weights);
        out << serialize_order(order_from_weight(w));
      } catch (const TieError& e) {
        err << "bto: " << e.what() << '\n';
        return kNo;
      }
      return kOk;
    }

    if (*flips_cmd) {
      const TermOrder order = load_order(file);
      require_valid(order, file);
      std::size_t flippable = 0;
      const auto primitive = primitive_pairs(order);
      for (const DisjointPair& p : primitive) {
        const bool f = is_flippable(order, p);
        flippable += f;
        out << pair_text(p) << (f ? " *" : "") << '\n';
      }
      out << "primitive=" << primitive.size() << " flippable=" << flippable << '\n';
      return kOk;
    }

    if (*flip_cmd) {
      const TermOrder order = load_order(file);
      require_valid(order, file);
      DisjointPair p;
      try {
        p = DisjointPair::parse(pair, false);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--pair: ") + e.what());
      }
      if (!is_flippable(order, p)) {
        err << "bto: " << pair_text(p) << " is not a flippable pair of this order\n";
        return kNo;
      }
      out << serialize_order(flip(order, p));
      return kOk;
    }

    if (*flipgraph_cmd) {
      const FlipGraph g =
          flip_graph(n, labeled ? FlipGraphMode::labeled : FlipGraphMode::canonical, with_coherent, threads);
      out << "vertices=" << g.vertices.size() << " edges=" << g.edge_count() << '\n';
      bool ok = true;
      if (check_connected) {
        const bool c = g.connected();
        ok = ok && c;
        out << "connected=" << (c ? "yes" : "no") << '\n';
      }
      if (with_coherent) {
        std::size_t coherent = 0;
        for (bool c : g.coherent) coherent += c;
        out << "coherent=" << coherent << '\n';
        if (check_connected) {
          const bool c = g.coherent_connected();
          ok = ok && c;
          out << "coherent-connected=" << (c ? "yes" : "no") << '\n';
        }
      }
      if (degree_histogram) {
        print_histogram(out, "flippable", g.flippable_histogram());
        print_histogram(out, "degree", g.degree_histogram());
        if (with_coherent) print_histogram(out, "coherent-facets", g.coherent_degree_histogram());
      }
      return ok ? kOk : kNo;
    }

    if (*charpoly_cmd) {
      const CharPolyResult r = char_poly(n, threads);
      const auto roots = r.poly.integer_roots();
      out << r.poly.to_string();
      if (!roots.empty()) out << " = " << r.poly.factored();
      out << '\n';
      if (show_counts)
        for (std::size_t i = 0; i < r.primes.size(); ++i) out << "q=" << r.primes[i] << " count=" << r.counts[i] << '\n';
      return kOk;
    }

    if (*regions_cmd) {
      out << region_count(n, threads) << '\n';
      return kOk;
    }

    if (*localize_cmd) {
      const std::string text = read_text_file(file);
      Signature sigma;
      try {
        if (looks_like_signature(text)) {
          sigma = parse_signature(text);
        } else {
          const PartialTermOrder p = parse_partial_order(text);
          if (p.is_total()) {
            const TermOrder o = p.to_total();
            require_valid(o, file);
            sigma = mu_from_order(o);
          } else {
            if (!validate_partial(p, 1).ok()) throw UsageError(file + ": not a generalized partial term order");
            sigma = mu_from_order(p);
          }
        }
      } catch (const ParseError& e) {
        throw UsageError(file + ": " + e.what());
      }
      if (!check) {
        out << format_signature(sigma);
        return kOk;
      }
      const int k = sigma.n();
      LocalizationResult loc;
      try {
        loc = check_localization(sigma);
      } catch (const AntisymmetryError& e) {
        out << "localization: no (" << e.what() << ")\n";
        loc.ok = false;
      }
      if (loc.failure) {
        const auto& f = *loc.failure;
        out << "localization: no X=" << f.x.to_string(k) << " Y=" << f.y.to_string(k) << " root=" << f.root + 1 << '\n';
      } else if (loc.ok) {
        out << "localization: yes\n";
      }
      const MuCheck mc = check_mu_conditions(sigma);
      if (mc.ok()) {
        out << "mu-conditions: ok\n";
      } else {
        out << "mu-conditions: fails-" << mc.failed_condition;
        const char* names[] = {"x", "y", "z"};
        for (std::size_t i = 0; i < mc.witness.size(); ++i)
          out << ' ' << (mc.failed_condition == 1 ? (i ? "-x" : "x") : names[i]) << '=' << mc.witness[i].to_string(k);
        out << '\n';
      }
      return loc.ok && mc.ok() ? kOk : kNo;
    }

    if (*baues_cmd) {
      const PartialTermOrder p = parse_partial_order(read_text_file(file));
      const PartialValidation v = validate_partial(p);
      if (!coherent_above) {
        out << "levels=" << p.level_count() << " subsets=" << p.size() << '\n';
        if (v.ok()) {
          out << "valid\n";
          return kOk;
        }
        out << "invalid\n";
        for (const auto& violation : v.violations) out << "  " << violation.describe() << '\n';
        return kNo;
      }
      if (!p.is_total()) throw UsageError(file + ": --coherent-above needs a total order");
      const TermOrder o = p.to_total();
      require_valid(o, file);
      const bool only = coherent_above_only_trivial(o);
      out << "coherent-above: " << (only ? "trivial-only" : "nontrivial") << '\n';
      return only ? kOk : kNo;
    }

    if (*certify_cmd) {
      const TermOrder order = load_order(file);
      require_valid(order, file);
      if (!cert_file.empty()) {
        Certificate cert;
        try {
          cert = parse_certificate(read_text_file(cert_file));
        } catch (const std::invalid_argument& e) {
          throw UsageError(cert_file + ": " + e.what());
        }
        const CertificateCheck c = verify_certificate(order, cert);
        out << "certificate: " << (c.ok ? "valid" : "invalid (" + c.reason + ")") << '\n';
        return c.ok ? kOk : kNo;
      }
      const CoherenceResult r = decide_coherence(order);
      if (r.coherent) {
        out << "coherent w=" << weight_text(r.weights) << '\n';
        return kNo;
      }
      out << format_certificate(r.certificate);
      return kOk;
    }
  } catch (const std::exception& e) {
    err << "bto: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace bto::cli
