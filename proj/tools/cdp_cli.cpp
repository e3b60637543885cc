#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>

#include "cdp/io.hpp"
#include "cdp/render.hpp"

namespace {

constexpr int kOk = 0;        // success / positive verdict
constexpr int kNegative = 1;  // well-formed input, negative verdict
constexpr int kBadInput = 2;  // malformed input

cdp::CDP load_cdp(const std::string& path) { return cdp::cdp_from_json(cdp::load_json_file(path)); }

bool looks_like_polytope(const cdp::json& j) { return !j.contains("functions"); }

void emit(const cdp::json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    cdp::save_json_file(out_path, j);
}

struct NegativeVerdict : std::runtime_error {
  using std::runtime_error::runtime_error;
};

cdp::FanoCertificate require_certificate(const cdp::CDP& c) {
  auto res = cdp::find_certificate(c);
  if (!cdp::certified(res)) {
    const auto& nf = std::get<cdp::NotFano>(res);
    throw NegativeVerdict("not Fano (condition " + std::to_string(nf.condition) +
                          "): " + nf.detail);
  }
  return std::get<cdp::FanoCertificate>(res);
}

int run(int argc, char** argv) {
  CLI::App app{"combinatorial divisorial polytopes: validation, certificates, canonical forms, "
               "enumeration and the two-dimensional classification"};
  app.require_subcommand(1);

  std::string in_path, in_path_b, out_path, format = "ascii", convert_to;
  int n = 3, dim = 2, threads = 1;
  std::uint64_t max_nodes = 10'000'000;
  bool no_pruning = false;

  auto* validate = app.add_subcommand("validate", "check a CDP file against the definition");
  validate->add_option("file", in_path)->required();

  auto* fano = app.add_subcommand("fano", "search for a Fano certificate");
  fano->add_option("file", in_path)->required();

  auto* normalize = app.add_subcommand("normalize", "eliminate integral-slope linear functions");
  normalize->add_option("file", in_path)->required();
  normalize->add_option("-o,--output", out_path);

  auto* canon = app.add_subcommand("canon", "print the canonical code");
  canon->add_option("file", in_path)->required();

  auto* equivcmd = app.add_subcommand("equiv", "decide equivalence of two normalized Fano CDPs");
  equivcmd->add_option("a", in_path)->required();
  equivcmd->add_option("b", in_path_b)->required();

  auto* convert = app.add_subcommand("convert", "polytope <-> two-function CDP");
  convert->add_option("file", in_path)->required();
  convert->add_option("-o,--output", out_path);
  convert->add_option("--to", convert_to, "cdp or polytope (default: inferred)");

  auto* bounds = app.add_subcommand("bounds", "alpha per basis direction and c(box)");
  bounds->add_option("file", in_path, "polytope or CDP file")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Fano CDP classes over a fixed base");
  enumerate->add_option("--base", in_path, "polytope file")->required();
  enumerate->add_option("--n", n, "number of functions")->required();
  enumerate->add_option("--max-nodes", max_nodes);
  enumerate->add_flag("--no-pruning", no_pruning);
  enumerate->add_option("-o,--output", out_path);

  auto* classify = app.add_subcommand("classify-2d", "the 34 two-dimensional non-toric classes");
  classify->add_option("--threads", threads);
  classify->add_option("-o,--output", out_path);

  auto* example = app.add_subcommand("example", "named constructions");
  std::string which = "cross";
  example->add_option("name", which, "cross")->required();
  example->add_option("--dim", dim);
  example->add_option("-o,--output", out_path);

  auto* render = app.add_subcommand("render", "draw a CDP");
  render->add_option("file", in_path)->required();
  render->add_option("--format", format, "ascii|tikz|svg");

  CLI11_PARSE(app, argc, argv);

  if (validate->parsed()) {
    cdp::CDP c = load_cdp(in_path);
    if (!cdp::check_positivity(c)) {
      std::cout << "invalid: sum of functions is not positive on the interior\n";
      return kNegative;
    }
    std::cout << "valid CDP: base dimension " << c.base().dim() << ", n=" << c.n() << "\n";
    return kOk;
  }

  if (fano->parsed()) {
    cdp::CDP c = load_cdp(in_path);
    auto res = cdp::find_certificate(c);
    if (!cdp::certified(res)) {
      const auto& nf = std::get<cdp::NotFano>(res);
      std::cout << "not Fano (condition " << nf.condition << "): " << nf.detail << "\n";
      return kNegative;
    }
    emit(cdp::certificate_to_json(std::get<cdp::FanoCertificate>(res)), out_path);
    return kOk;
  }

  if (normalize->parsed()) {
    cdp::CDP c = load_cdp(in_path);
    auto cert = require_certificate(c);
    cdp::NormalizeResult r = cdp::normalize(c, cert);
    cdp::json j = cdp::cdp_to_json(r.cdp);
    j["toric"] = r.toric;
    cdp::json moves = cdp::json::array();
    for (const cdp::Move& m : r.moves) moves.push_back(cdp::move_to_json(m));
    j["moves"] = moves;
    emit(j, out_path);
    return kOk;
  }

  if (canon->parsed()) {
    cdp::CDP c = load_cdp(in_path);
    auto cert = require_certificate(c);
    cdp::CanonicalCode code = cdp::canonical_code(c, cert);
    std::cout << code.bytes << "\n";
    if (code.best_effort) std::cerr << "note: best-effort code (base dimension >= 2)\n";
    return kOk;
  }

  if (equivcmd->parsed()) {
    cdp::CDP a = load_cdp(in_path), b = load_cdp(in_path_b);
    if (cdp::equivalent(a, b)) {
      std::cout << "equivalent\n";
      return kOk;
    }
    std::cout << "inequivalent\n";
    return kNegative;
  }

  if (convert->parsed()) {
    cdp::json j = cdp::load_json_file(in_path);
    bool to_cdp = convert_to.empty() ? looks_like_polytope(j) : convert_to == "cdp";
    if (to_cdp) {
      cdp::LatticePolytope p = cdp::polytope_from_json(j);
      emit(cdp::cdp_to_json(cdp::polytope_to_cdp(p)), out_path);
    } else {
      cdp::CDP c = cdp::cdp_from_json(j);
      emit(cdp::polytope_to_json(cdp::cdp_to_polytope(c)), out_path);
    }
    return kOk;
  }

  if (bounds->parsed()) {
    cdp::json j = cdp::load_json_file(in_path);
    std::optional<cdp::CDP> c;
    cdp::LatticePolytope box = [&] {
      if (looks_like_polytope(j)) return cdp::polytope_from_json(j);
      c = cdp::cdp_from_json(j);
      return c->base();
    }();
    std::vector<cdp::Vec> basis;
    for (int jax = 0; jax < box.dim(); ++jax) {
      cdp::Vec e(box.dim(), 0);
      e[jax] = 1;
      std::cout << "alpha e_" << (jax + 1) << " = " << cdp::to_string(cdp::alpha_v(box, e))
                << "\n";
      basis.push_back(std::move(e));
    }
    std::cout << "c(box) = " << cdp::to_string(cdp::c_of_box(box, basis)) << "\n";
    if (c) {
      auto cert = require_certificate(*c);
      for (const cdp::Vec& e : basis) {
        int r = cdp::directional_bound(*c, cert, e);
        std::cout << "directional count along e = " << r << "\n";
      }
    }
    return kOk;
  }

  if (enumerate->parsed()) {
    cdp::LatticePolytope box = cdp::polytope_from_json(cdp::load_json_file(in_path));
    cdp::EnumerationOptions opts;
    opts.max_nodes = max_nodes;
    opts.structural_pruning = !no_pruning && box.dim() == 1;
    auto classes = cdp::enumerate_fixed_base(box, n, opts);
    cdp::ClassificationResult r;
    r.classes = std::move(classes);
    r.breakdown[{static_cast<int>(box.lattice_points().size()) - 1, n}] =
        static_cast<int>(r.classes.size());
    std::cout << r.classes.size() << " classes\n";
    emit(cdp::classification_to_json(r), out_path);
    return kOk;
  }

  if (classify->parsed()) {
    cdp::ClassificationResult r = cdp::classify_2d(threads);
    std::cout << r.classes.size() << " classes\n";
    for (const auto& [cell, count] : r.breakdown)
      std::cout << "m=" << cell.first << ", n=" << cell.second << ": " << count << "\n";
    if (!out_path.empty()) cdp::save_json_file(out_path, cdp::classification_to_json(r));
    return kOk;
  }

  if (example->parsed()) {
    if (which != "cross") throw std::invalid_argument("unknown example: " + which);
    auto [c, cert] = cdp::cross_example(dim);
    cdp::json j = cdp::cdp_to_json(c);
    j["certificate"] = cdp::certificate_to_json(cert);
    emit(j, out_path);
    return kOk;
  }

  if (render->parsed()) {
    cdp::CDP c = load_cdp(in_path);
    if (format == "ascii")
      std::cout << cdp::render_ascii(c);
    else if (format == "tikz")
      std::cout << cdp::render_tikz(c);
    else if (format == "svg")
      std::cout << cdp::render_svg(c);
    else
      throw std::invalid_argument("unknown format: " + format);
    return kOk;
  }

  return kBadInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NegativeVerdict& e) {
    std::cerr << e.what() << "\n";
    return kNegative;
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return kBadInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad input: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}
