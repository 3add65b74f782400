// lrhive: count / enumerate / map / oracle / verify / render
// Exit codes: 0 success, 1 usage error, 2 invariant or domain error,
// 3 verification failure.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lrhive/json_io.hpp"
#include "lrhive/render.hpp"
#include "lrhive/verification.hpp"

using namespace lrhive;
using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw std::invalid_argument(std::string(what) + ": not valid JSON");
  return j;
}

int thread_count() {
  const char* v = std::getenv("LRHIVE_THREADS");
  if (!v) return 1;
  const int k = std::atoi(v);
  return k >= 1 ? k : 1;
}

// Every model's object pulls back to a LR tableau; every target is its image.
SkewTableau decode(Model model, const json& j, const LRTriple& t) {
  switch (model) {
    case Model::lr: return skew_tableau_from_json(j);
    case Model::gz1: return phi_gz_to_lr(tarray_from_json(j), t);
    case Model::gz2: return psi_gz2_to_lr(tarray_from_json(j), t);
    case Model::hive: return hive_to_lr(harray_from_json(j), t);
  }
  throw std::invalid_argument("unknown model");
}

void print_object(Model model, const SkewTableau& y, const LRTriple& t,
                  bool ascii) {
  switch (model) {
    case Model::lr:
      std::cout << (ascii ? render(y) : to_json(y).dump() + "\n");
      return;
    case Model::gz1: {
      TArray s = phi_lr_to_gz(y, t);
      std::cout << (ascii ? render(s) : to_json(s).dump() + "\n");
      return;
    }
    case Model::gz2: {
      TArray s = psi_lr_to_gz2(y, t);
      std::cout << (ascii ? render(s) : to_json(s).dump() + "\n");
      return;
    }
    case Model::hive: {
      HArray h = lr_to_hive(y, t);
      std::cout << (ascii ? render(h) : to_json(h).dump() + "\n");
      return;
    }
  }
}

struct Args {
  std::string model = "lr", triple, input, from, to, mu, nu, lambda;
  std::string format = "ascii", mode = "exhaustive", type = "tarray";
  long long limit = 0;
  int n = 3;
  Int max_part = 3;
  std::uint64_t seed = 0;
};

int run(int argc, char** argv) {
  CLI::App app{"Littlewood-Richardson coefficients via tableaux, hives and GZ schemes"};
  app.require_subcommand(1);
  Args a;

  auto add_triple = [&](CLI::App* cmd) {
    cmd->add_option("--triple", a.triple, "LRTriple JSON {\"mu\":...,\"nu\":...,\"lambda\":...}")
        ->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", a.format, "ascii|json")->check(CLI::IsMember({"ascii", "json"}));
  };

  CLI::App* count_cmd = app.add_subcommand("count", "count a family");
  count_cmd->add_option("--model", a.model, "lr|hive|gz1|gz2")->required();
  add_triple(count_cmd);

  CLI::App* enum_cmd = app.add_subcommand("enumerate", "list a family");
  enum_cmd->add_option("--model", a.model, "lr|hive|gz1|gz2")->required();
  add_triple(enum_cmd);
  enum_cmd->add_option("--limit", a.limit, "emit at most this many")->check(CLI::PositiveNumber);
  add_format(enum_cmd);

  CLI::App* map_cmd = app.add_subcommand("map", "apply a bijection");
  map_cmd->add_option("--from", a.from, "lr|hive|gz1|gz2")->required();
  map_cmd->add_option("--to", a.to, "lr|hive|gz1|gz2")->required();
  add_triple(map_cmd);
  map_cmd->add_option("--in", a.input, "object JSON")->required();
  add_format(map_cmd);

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Schur-polynomial ground truth");
  oracle_cmd->add_option("--mu", a.mu, "DominantWeight JSON")->required();
  oracle_cmd->add_option("--nu", a.nu, "DominantWeight JSON")->required();
  oracle_cmd->add_option("--lambda", a.lambda, "optional: one coefficient instead of all");

  CLI::App* verify_cmd = app.add_subcommand("verify", "cross-model verification sweep");
  verify_cmd->add_option("--n", a.n, "rank")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--max-part", a.max_part, "part bound for mu, nu")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--mode", a.mode, "exhaustive or sampled:<k>");
  verify_cmd->add_option("--seed", a.seed, "RNG seed");
  add_format(verify_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "ASCII-render an object");
  render_cmd->add_option("--type", a.type, "tarray|harray|tableau")
      ->check(CLI::IsMember({"tarray", "harray", "tableau"}));
  render_cmd->add_option("--in", a.input, "object JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // normalize CLI11's per-error codes: 0 for --help, 1 for any usage error
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (count_cmd->parsed()) {
    const LRTriple t = lr_triple_from_json(parse_json(a.triple, "--triple"));
    std::cout << count(model_from_string(a.model), t) << "\n";
    return 0;
  }

  if (enum_cmd->parsed()) {
    const LRTriple t = lr_triple_from_json(parse_json(a.triple, "--triple"));
    const Model m = model_from_string(a.model);
    const bool ascii = a.format == "ascii";
    long long emitted = 0;
    auto more = [&] { return a.limit == 0 || ++emitted < a.limit; };
    auto show = [&](const std::string& ascii_form, const json& j) {
      if (ascii)
        std::cout << ascii_form << "\n";
      else
        std::cout << j.dump() << "\n";
      return more();
    };
    switch (m) {
      case Model::lr:
        enumerate_lr(t, [&](const SkewTableau& y) { return show(render(y), to_json(y)); });
        break;
      case Model::hive:
        enumerate_hives(t, [&](const HArray& h) { return show(render(h), to_json(h)); });
        break;
      case Model::gz1:
        enumerate_gz(gz1_of(t), [&](const TArray& s) { return show(render(s), to_json(s)); });
        break;
      case Model::gz2:
        enumerate_gz(gz2_of(t), [&](const TArray& s) { return show(render(s), to_json(s)); });
        break;
    }
    return 0;
  }

  if (map_cmd->parsed()) {
    const LRTriple t = lr_triple_from_json(parse_json(a.triple, "--triple"));
    const SkewTableau y = decode(model_from_string(a.from), parse_json(a.input, "--in"), t);
    print_object(model_from_string(a.to), y, t, a.format == "ascii");
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const DominantWeight mu = dominant_weight_from_json(parse_json(a.mu, "--mu"));
    const DominantWeight nu = dominant_weight_from_json(parse_json(a.nu, "--nu"));
    if (!a.lambda.empty()) {
      const DominantWeight lambda =
          dominant_weight_from_json(parse_json(a.lambda, "--lambda"));
      std::cout << lr_coefficient_oracle(LRTriple(mu, nu, lambda)) << "\n";
      return 0;
    }
    json out = json::object();
    for (const auto& [lam, c] : schur_decompose(multiply(schur(mu), schur(nu)))) {
      json key = lam;
      out[key.dump()] = c;
    }
    std::cout << out.dump() << "\n";
    return 0;
  }

  if (verify_cmd->parsed()) {
    VerifySweepConfig cfg;
    cfg.n = a.n;
    cfg.max_part = a.max_part;
    cfg.seed = a.seed;
    cfg.threads = thread_count();
    if (a.mode == "exhaustive") {
      cfg.exhaustive = true;
    } else if (a.mode.rfind("sampled:", 0) == 0) {
      cfg.exhaustive = false;
      cfg.samples = std::atoi(a.mode.c_str() + 8);
      if (cfg.samples < 1)
        throw std::invalid_argument("--mode sampled:<k> needs k >= 1");
    } else {
      throw std::invalid_argument("--mode must be exhaustive or sampled:<k>");
    }
    const VerifyReport rep = run_verification(cfg);
    if (a.format == "json") {
      json out{{"triples", rep.triples_checked},
               {"objects", rep.objects_checked},
               {"arrays", rep.arrays_checked},
               {"failures", rep.failures}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << rep.summary() << "\n";
      for (const std::string& f : rep.failures) std::cout << "FAIL " << f << "\n";
    }
    return rep.ok() ? 0 : 3;
  }

  // render
  const json j = parse_json(a.input, "--in");
  if (a.type == "tarray")
    std::cout << render(tarray_from_json(j));
  else if (a.type == "harray")
    std::cout << render(harray_from_json(j));
  else
    std::cout << render(skew_tableau_from_json(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
