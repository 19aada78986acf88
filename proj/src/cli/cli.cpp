#include "semireg/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "semireg/error.hpp"
#include "semireg/io/parse.hpp"
#include "semireg/io/serialize.hpp"

namespace semireg::cli {

namespace {

struct OptionError {
  std::string option;
  std::string message;
  std::size_t position;
};

template <class F>
auto parsed(const std::string& option, const std::string& text, F f) -> decltype(f(text)) {
  try {
    return f(text);
  } catch (const semireg::ParseError& e) {
    throw OptionError{option, e.message(), e.position()};
  }
}

struct Options {
  std::string output = "text";
  std::optional<std::int64_t> bound;
  std::string vars, ideal, seq, cone, gens, point, model, f, g, betas, alpha, points, except;
  std::string mode = "auto";
  std::size_t cap = kDefaultGeneratorCap;
  std::size_t threshold = 0;
  std::size_t depth = 0;
};

std::vector<std::string> variables(const Options& o) { return parsed("--vars", o.vars, parse_variables); }

MonomialIdeal ideal(const Options& o, const std::vector<std::string>& vars) {
  auto gens = parsed("--ideal", o.ideal, [&](const std::string& t) { return parse_monomials(t, vars); });
  return min_gens(vars.size(), gens);
}

MonomialSequence sequence(const Options& o, const std::vector<std::string>& vars) {
  auto items = parsed("--seq", o.seq, [&](const std::string& t) { return parse_monomials(t, vars); });
  return MonomialSequence{vars.size(), items};
}

std::string render(const MonomialSequence& s, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < s.items.size(); ++i) out += (i ? "," : "") + to_string(s.items[i], vars);
  return out;
}

SupportPattern support(const Options& o) {
  SupportPattern I;
  I.threshold = o.threshold;
  if (!o.except.empty()) I.exceptions = parsed("--except", o.except, parse_index_set);
  return I;
}

std::int64_t bound_or(const Options& o, std::int64_t fallback) { return o.bound ? *o.bound : fallback; }

Json verb_betti(const Options& o) {
  auto vars = variables(o);
  auto i = ideal(o, vars);
  Json out{{"verb", "betti"}, {"ideal", to_string(i, vars)}};
  out.update(to_json(betti_table(i, o.cap)));
  return out;
}

Json verb_pd(const Options& o) {
  auto vars = variables(o);
  auto i = ideal(o, vars);
  return Json{{"verb", "pd"}, {"ideal", to_string(i, vars)}, {"pd", betti_table(i, o.cap).pd}};
}

Json verb_cd(const Options& o) {
  auto vars = variables(o);
  auto i = ideal(o, vars);
  return Json{{"verb", "cd"},
              {"ideal", to_string(i, vars)},
              {"radical", to_string(radical(i), vars)},
              {"cd", cd(i, o.cap)},
              {"pd", betti_table(i, o.cap).pd}};
}

Json verb_regseq(const Options& o) {
  auto vars = variables(o);
  auto s = sequence(o, vars);
  Json out{{"verb", "regseq"}, {"sequence", render(s, vars)}};
  out.update(to_json(pd_criterion(s, o.cap), s, vars));
  return out;
}

Json verb_paramseq(const Options& o) {
  auto vars = variables(o);
  auto s = sequence(o, vars);
  bool unit = std::any_of(s.items.begin(), s.items.end(), [](const Monomial& m) { return m.is_unit(); });
  Json out{{"verb", "paramseq"},
           {"sequence", render(s, vars)},
           {"parameter_sequence", is_parameter_sequence_poly(s)},
           {"oracle_regular", unit ? Json(nullptr) : Json(oracle_regular(s).regular)}};
  out["cd_subsets"] = unit ? Json(nullptr) : to_json(cd_subset_check(s));
  return out;
}

Json verb_classify(const Options& o) {
  auto c = parsed("--cone", o.cone, [](const std::string& t) { return parse_cone(t); });
  ModelType m = classify(c);
  Json out{{"verb", "classify"}, {"cone", to_string(c)}};
  out.update(to_json(m));
  out["agreement"] = to_json(classification_agreement(c, m, bound_or(o, 20)));
  return out;
}

Json verb_normalize(const Options& o) {
  auto gens = parsed("--gens", o.gens, parse_points);
  Json out{{"verb", "normalize"}};
  out.update(to_json(normalize_map(gens, bound_or(o, 10))));
  return out;
}

Json verb_reject_pair(const Options& o) {
  ModelSemigroup s{parse_tag(o.model), {}};
  Point f = parsed("--f", o.f, parse_point);
  Point g = parsed("--g", o.g, parse_point);
  unsigned power = static_cast<unsigned>(bound_or(o, kDefaultPowerBound));
  RejectionCertificate cert = param_pair_reject(s, f, g, power);
  PairRegularity pair = model_regular_pair(s, f, g);
  Json out{{"verb", "reject-pair"}, {"model", tag_name(s.tag)}, {"f", to_json(f)}, {"g", to_json(g)}};
  out["certificate"] = to_json(cert);
  out["certificate_verified"] = verify_certificate(s, f, g, cert);
  out["regular_pair"] = pair.regular;
  out["pair_witness"] = pair.witness ? to_json(*pair.witness) : Json(nullptr);
  out["pair_witness_verified"] = pair.witness ? Json(verify_pair_witness(s, f, g, *pair.witness)) : Json(nullptr);
  return out;
}

Json verb_lazard(const Options& o) {
  auto betas = parsed("--betas", o.betas, parse_finseqs);
  SupportPattern I = support(o);
  std::optional<FinSeq> alpha;
  if (!o.alpha.empty()) alpha = parsed("--alpha", o.alpha, parse_finseq);
  std::string mode = o.mode;
  if (mode == "auto") {
    bool nonneg = std::all_of(betas.begin(), betas.end(), [](const FinSeq& b) { return b.nonnegative(); }) &&
                  (!alpha || alpha->nonnegative());
    mode = !alpha ? "closure" : nonneg ? "resolve" : "mixed";
  }
  auto need_alpha = [&] {
    if (!alpha) throw Error(ErrorKind::PreconditionFailed, "mode " + mode + " needs --alpha");
  };
  Json out{{"verb", "lazard-resolve"}, {"mode", mode}};
  std::vector<FinSeq> inputs = betas;
  IndependentFamily fam;
  if (mode == "closure") {
    fam = adjoin_closure(betas, I);
  } else if (mode == "resolve") {
    need_alpha();
    fam = resolve(betas, *alpha, I);
    inputs.push_back(*alpha);
  } else if (mode == "mixed") {
    need_alpha();
    MixedRoute route;
    fam = extend_mixed(betas, *alpha, I, &route);
    out["route"] = route_name(route);
    inputs.push_back(*alpha);
  } else if (mode == "split") {
    SplitResult r = split_off(betas, I);
    out["beta_prime"] = to_string(r.beta_prime);
    fam = r.gamma;
  } else {
    throw OptionError{"--mode", "unknown mode '" + mode + "'", 0};
  }
  out["family"] = to_json(fam);
  out["checks"] = to_json(check_family(fam, inputs));
  return out;
}

Json verb_direct_system(const Options& o) {
  Json out{{"verb", "direct-system"}};
  std::vector<FinSeq> points;
  SupportPattern I;
  if (!o.gens.empty()) {
    auto gens = parsed("--gens", o.gens, parse_points);
    if (gens.empty()) throw Error(ErrorKind::PreconditionFailed, "no generators");
    AffineSemigroup h = AffineSemigroup::make(gens.front().size(), gens);
    std::size_t depth = o.depth ? o.depth : h.generators.size();
    FullEmbedding e = embed_full(h, depth, bound_or(o, 10));
    points = e.images;
    I = e.support;
    Json images = Json::array();
    for (const auto& p : points) images.push_back(to_string(p));
    out["images"] = images;
    out["certificate"] = to_json(e.certificate);
  } else {
    points = parsed("--points", o.points, parse_finseqs);
    I = support(o);
  }
  std::size_t depth = o.depth ? std::min(o.depth, points.size()) : points.size();
  out["support"] = to_json(I);
  out.update(to_json(build_direct_system(points, I, depth)));
  return out;
}

Json verb_semigroup_check(const Options& o) {
  auto gens = parsed("--gens", o.gens, parse_points);
  if (gens.empty()) throw Error(ErrorKind::PreconditionFailed, "no generators");
  AffineSemigroup s = AffineSemigroup::make(gens.front().size(), gens, bound_or(o, 0));
  Json out{{"verb", "semigroup-check"}};
  Json g = Json::array();
  for (const auto& p : s.generators) g.push_back(to_json(p));
  out["generators"] = g;
  out["positive"] = to_json(is_positive(s));
  out["normal"] = to_json(is_normal(s));
  out["group_rank"] = group_rank(s);
  MembershipOracle oracle(s);
  Json units = Json::array();
  for (const auto& u : oracle.unit_generators()) units.push_back(to_json(u));
  out["units"] = units;
  if (!o.point.empty()) {
    Point p = parsed("--point", o.point, parse_point);
    out["point"] = to_json(p);
    out["member"] = to_json(membership(s, p));
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact toolkit for normal semigroups and monomial ideals", "semireg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", o.output, "json | json-like | text")
      ->check(CLI::IsMember({"json", "json-like", "text"}));
  app.add_option("--bound", o.bound, "box or power bound override");

  using Handler = std::function<Json(const Options&)>;
  std::map<CLI::App*, Handler> handlers;
  auto verb = [&](const std::string& name, const std::string& help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    handlers[sub] = std::move(h);
    return sub;
  };
  auto ideal_opts = [&](CLI::App* s) {
    s->add_option("--vars", o.vars)->required();
    s->add_option("--ideal", o.ideal)->required();
    s->add_option("--cap", o.cap);
  };
  auto seq_opts = [&](CLI::App* s) {
    s->add_option("--vars", o.vars)->required();
    s->add_option("--seq", o.seq)->required();
    s->add_option("--cap", o.cap);
  };
  auto support_opts = [&](CLI::App* s) {
    s->add_option("--threshold", o.threshold);
    s->add_option("--except", o.except);
  };

  ideal_opts(verb("betti", "Betti numbers of A/I", verb_betti));
  ideal_opts(verb("pd", "projective dimension of A/I", verb_pd));
  ideal_opts(verb("cd", "cohomological dimension", verb_cd));
  seq_opts(verb("regseq", "regularity report", verb_regseq));
  seq_opts(verb("paramseq", "parameter sequence test", verb_paramseq));
  verb("classify", "classify a plane cone", verb_classify)->add_option("--cone", o.cone)->required();
  verb("normalize", "normalizing map of a 2-generated cone", verb_normalize)->add_option("--gens", o.gens)->required();
  {
    auto* s = verb("reject-pair", "reject a monomial pair as a parameter sequence", verb_reject_pair);
    s->add_option("--model", o.model)->required();
    s->add_option("--f", o.f)->required();
    s->add_option("--g", o.g)->required();
  }
  {
    auto* s = verb("lazard-resolve", "independent families of sequences", verb_lazard);
    s->add_option("--betas", o.betas)->required();
    s->add_option("--alpha", o.alpha);
    s->add_option("--mode", o.mode)->check(CLI::IsMember({"auto", "resolve", "closure", "mixed", "split"}));
    support_opts(s);
  }
  {
    auto* s = verb("direct-system", "direct system of free semigroups", verb_direct_system);
    auto* gens = s->add_option("--gens", o.gens);
    auto* points = s->add_option("--points", o.points);
    gens->excludes(points);
    s->require_option(1, 2);
    s->add_option("--depth", o.depth);
    support_opts(s);
  }
  {
    auto* s = verb("semigroup-check", "positivity, normality, membership", verb_semigroup_check);
    s->add_option("--gens", o.gens)->required();
    s->add_option("--point", o.point);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  if (o.bound && *o.bound <= 0) {
    err << "parse error: --bound must be positive\n";
    return kExitParse;
  }

  const bool machine = o.output != "text";
  try {
    CLI::App* chosen = app.get_subcommands().front();
    Json doc = handlers.at(chosen)(o);
    out << (machine ? doc.dump(2) + "\n" : render_text(doc));
    return kExitOk;
  } catch (const OptionError& e) {
    err << "parse error in " << e.option << " at position " << e.position << ": " << e.message << "\n";
    if (machine)
      out << Json{{"error", "ParseError"}, {"option", e.option}, {"position", e.position}, {"message", e.message}}.dump(2)
          << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << error_name(e.kind()) << ": " << e.message();
    if (!e.witness().empty()) err << " [witness " << e.witness() << "]";
    err << "\n";
    if (machine)
      out << Json{{"error", error_name(e.kind())}, {"message", e.message()}, {"witness", e.witness()}}.dump(2) << "\n";
    return kExitDomain;
  }
}

}  // namespace semireg::cli
