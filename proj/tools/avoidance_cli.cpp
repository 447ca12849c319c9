// Command-line front end. Every command prints one JSON document on stdout.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 resource bound.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "avoidance/avoidance.hpp"
#include "avoidance/builder.hpp"
#include "avoidance/error.hpp"
#include "avoidance/graded.hpp"
#include "avoidance/integers.hpp"
#include "avoidance/serialize.hpp"
#include "avoidance/structure.hpp"
#include "avoidance/harness/corpus.hpp"
#include "avoidance/harness/suites.hpp"

namespace {

using nlohmann::json;
using namespace avoidance;

constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kResourceBound = 3;

struct Options {
  bool pretty = false;
};

json read_json(const std::string& source) {
  if (!source.empty() && (source.front() == '{' || source.front() == '[')) return json::parse(source);
  std::stringstream buffer;
  if (source == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) fail(ErrorKind::MalformedDescription, "cannot open '" + source + "'");
    buffer << in.rdbuf();
  }
  return json::parse(buffer.str());
}

RingDescription read_desc(const std::string& source) { return ring_description_from_json(read_json(source)); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    const auto b = part.find_first_not_of(' '), e = part.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
  }
  return out;
}

// "x,y" -> the ideal (x, y); an empty list gives the zero ideal.
Ideal parse_ideal(const Ring& ring, const std::string& text) {
  std::vector<Elem> gens;
  for (const auto& g : split(text, ',')) gens.push_back(ring->parse_element(g));
  return ideal_generated(ring, gens);
}

// "x;y;x+y" -> three principal ideals.
std::vector<Ideal> parse_family(const Ring& ring, const std::string& text) {
  std::vector<Ideal> out;
  for (const auto& member : split(text, ';')) out.push_back(parse_ideal(ring, member));
  return out;
}

std::vector<std::string> names_of(const Ring& ring, const std::vector<Elem>& elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(ring->name(e));
  return out;
}

json cover_json(const MinCover& cover) {
  json members = json::array();
  for (const auto& m : cover.family.members) members.push_back(ideal_label(m));
  return {{"size", cover.size}, {"members", members}, {"certified_minimal", cover.certified_minimal}};
}

int emit(const Options& o, const json& j, int code = 0) {
  std::cout << (o.pretty ? j.dump(2) : j.dump()) << '\n';
  return code;
}

int cmd_build(const Options& o, const std::string& path, const Limits& limits) {
  const auto desc = read_desc(path);
  const Ring ring = build_ring(desc, limits);
  const auto lattice = all_ideals(ring, limits);
  const auto spec = spectrum(lattice);
  std::size_t units = 0;
  for (Elem a = 0; a < ring->size(); ++a) units += ring->is_unit(a);
  return emit(o, {{"ring", to_json(desc)},
                  {"size", ring->size()},
                  {"characteristic", ring->characteristic()},
                  {"units", units},
                  {"field", ring->is_field()},
                  {"ideals", lattice.size()},
                  {"maximal_ideals", spec.maximals.size()},
                  {"avoidance_ring", is_avoidance_ring(lattice)}});
}

int cmd_ideals(const Options& o, const std::string& path, const Limits& limits) {
  const Ring ring = build_ring(read_desc(path), limits);
  return emit(o, to_json(all_ideals(ring, limits)));
}

int cmd_avoidance(const Options& o, const std::string& path, const std::string& ideal_text, const Limits& limits) {
  const Ring ring = build_ring(read_desc(path), limits);
  const auto lattice = all_ideals(ring, limits);
  if (!ideal_text.empty()) {
    const Ideal ideal = parse_ideal(ring, ideal_text);
    return emit(o, {{"ideal", ideal_label(ideal)}, {"has_avoidance", has_avoidance(ideal, lattice)}});
  }
  json failing = json::array();
  for (const auto& ideal : lattice)
    if (!has_avoidance(ideal, lattice)) failing.push_back(ideal_label(ideal));
  return emit(o, {{"avoidance_ring", failing.empty()}, {"ideals", lattice.size()}, {"without_avoidance", failing}});
}

int cmd_mincover(const Options& o, const std::string& path, const std::string& ideal_text, const Limits& limits) {
  const Ring ring = build_ring(read_desc(path), limits);
  const auto lattice = all_ideals(ring, limits);
  auto one = [&](const Ideal& ideal) {
    const auto cover = min_cover(ideal, lattice);
    return json{{"ideal", ideal_label(ideal)}, {"cover", cover ? cover_json(*cover) : json(nullptr)}};
  };
  if (!ideal_text.empty()) return emit(o, one(parse_ideal(ring, ideal_text)));
  json all = json::array();
  for (const auto& ideal : lattice)
    if (!has_avoidance(ideal, lattice)) all.push_back(one(ideal));
  return emit(o, all);
}

int cmd_mccoy(const Options& o, const std::string& path, const std::string& ideal_text, const std::string& family_text,
              const Limits& limits) {
  const Ring ring = build_ring(read_desc(path), limits);
  CoverFamily family{parse_ideal(ring, ideal_text), parse_family(ring, family_text)};
  const auto result = mccoy(family);
  json out = harness::to_json(result);
  out["n"] = family.n();
  out["irredundant"] = is_irredundant(family);
  return emit(o, out);
}

int cmd_decompose(const Options& o, const std::string& path, const Limits& limits) {
  const Ring ring = build_ring(read_desc(path), limits);
  const auto dec = local_decomposition(ring, limits);
  const auto back = reassemble(dec, limits);
  json factors = json::array();
  for (const auto& f : dec.factors)
    factors.push_back({{"maximal", ideal_label(f.maximal)},
                       {"stable_power", ideal_label(f.stable_power)},
                       {"size", f.ring->size()},
                       {"field", f.ring->is_field()}});
  return emit(o, {{"size", ring->size()}, {"factors", factors}, {"reassembles", back.combined.is_injective() && back.combined.is_surjective()}});
}

int cmd_graded(const Options& o, const std::string& path, const Limits& limits) {
  const auto desc = read_desc(path);
  const auto* graded = std::get_if<Graded>(&desc.node);
  if (!graded) fail(ErrorKind::MalformedDescription, "expected a graded description");
  const auto algebra = build_graded(*graded, limits);
  const auto gens = minimal_generators(algebra);
  const auto cls = graded_avoidance_classify(algebra, limits);
  return emit(o, {{"dimension", algebra.dim()},
                  {"size", algebra.ring->size()},
                  {"minimal_generators", names_of(algebra.ring, gens)},
                  {"cotangent_dimension", cotangent_dimension(algebra)},
                  {"avoidance", cls.avoidance},
                  {"pir", cls.pir},
                  {"truncated_univariate", cls.truncated_univariate}});
}

int cmd_zz(const Options& o, std::uint64_t ideal, const std::string& family_text) {
  using namespace avoidance::zz;
  std::vector<ZIdeal> family;
  for (const auto& part : split(family_text, ',')) family.push_back(ZIdeal{std::stoull(part)});
  const ZIdeal target{ideal};
  const bool covered = cover_decision(target, family);
  const auto member = containing_member(target, family);
  if (covered != member.has_value())
    fail(ErrorKind::EngineBug, "cover decision and divisibility shortcut disagree");
  json out = {{"ideal", ideal}, {"covered", covered}, {"containing_member", member ? json(*member) : json(nullptr)}};
  if (covered) {
    const auto m = zz::mccoy(target, family);
    out["exponent"] = m.exponent;
    out["member"] = m.member;
  }
  return emit(o, out);
}

int cmd_verify(const Options& o, const std::string& suite, std::uint64_t seed, std::size_t count, unsigned jobs,
               const Limits& limits) {
  harness::CorpusParams params;
  params.count = count;
  params.max_ring_size = std::min<std::size_t>(params.max_ring_size, limits.max_ring_size);
  const auto corpus = harness::generate_corpus(seed, params);
  harness::SuiteOptions options;
  options.jobs = std::max(1u, jobs);
  options.limits = limits;
  const auto report = harness::run_suite(corpus, suite, options);
  return emit(o, harness::to_json(report), report.passed() ? 0 : kPropertyFailure);
}

int cmd_conjecture(const Options& o, const std::string& path, std::size_t samples, const Limits& limits) {
  const Ring target = build_ring(read_desc(path), limits);
  std::vector<RingDescription> from = harness::golden_rings();
  for (std::uint64_t n : {2, 3, 4, 6, 8, 12}) from.push_back(desc::zmod(n));
  const auto sources = harness::conjecture_sources(target, from, samples, limits);
  return emit(o, harness::to_json(conjecture_probe(target, sources, limits)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative ring avoidance engine"};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--pretty", opts.pretty, "Indent the JSON output");

  std::string desc, ideal, family, suite = "all", target;
  std::uint64_t seed = 1, zideal = 0;
  std::size_t count = 50, samples = 16;
  unsigned jobs = 1;

  auto* build = app.add_subcommand("build", "Validate a ring description and print statistics");
  build->add_option("desc", desc, "Ring description (file, '-' or inline JSON)")->required();
  auto* ideals = app.add_subcommand("ideals", "Print the ideal lattice");
  ideals->add_option("desc", desc)->required();
  auto* avoid = app.add_subcommand("avoidance", "Avoidance of one ideal or of the whole ring");
  avoid->add_option("desc", desc)->required();
  avoid->add_option("--ideal", ideal, "Generators, comma separated");
  auto* mincover = app.add_subcommand("mincover", "Minimum covers by proper subideals");
  mincover->add_option("desc", desc)->required();
  mincover->add_option("--ideal", ideal, "Generators, comma separated");
  auto* mc = app.add_subcommand("mccoy", "Exponents for a cover I <= I_1 u ... u I_n");
  mc->add_option("desc", desc)->required();
  mc->add_option("--ideal", ideal, "Target generators, comma separated")->required();
  mc->add_option("--family", family, "Members separated by ';', generators by ','")->required();
  auto* decompose = app.add_subcommand("decompose", "Split into local factors");
  decompose->add_option("desc", desc)->required();
  auto* graded = app.add_subcommand("graded", "Generators and classification of a graded algebra");
  graded->add_option("desc", desc)->required();
  auto* zz = app.add_subcommand("zz", "Covers of ideals of the integers");
  zz->add_option("--ideal", zideal, "Generator of the target ideal")->required();
  zz->add_option("--family", family, "Generators n1,n2,...")->required();
  auto* verify = app.add_subcommand("verify", "Run a verification suite over a generated corpus");
  verify->add_option("--suite", suite)->check(CLI::IsMember(harness::suite_ids()));
  verify->add_option("--seed", seed);
  verify->add_option("--count", count);
  verify->add_option("--jobs", jobs);
  auto* conj = app.add_subcommand("conjecture", "Probe maps into a target ring");
  conj->add_option("--target", target)->required();
  conj->add_option("--samples", samples);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    const Limits limits = Limits::from_environment();
    if (*build) return cmd_build(opts, desc, limits);
    if (*ideals) return cmd_ideals(opts, desc, limits);
    if (*avoid) return cmd_avoidance(opts, desc, ideal, limits);
    if (*mincover) return cmd_mincover(opts, desc, ideal, limits);
    if (*mc) return cmd_mccoy(opts, desc, ideal, family, limits);
    if (*decompose) return cmd_decompose(opts, desc, limits);
    if (*graded) return cmd_graded(opts, desc, limits);
    if (*zz) return cmd_zz(opts, zideal, family);
    if (*verify) return cmd_verify(opts, suite, seed, count, jobs, limits);
    if (*conj) return cmd_conjecture(opts, target, samples, limits);
  } catch (const Error& e) {
    std::cout << json{{"error", std::string(to_string(e.kind()))}, {"detail", e.what()}}.dump() << '\n';
    if (e.is_resource_bound()) return kResourceBound;
    return e.kind() == ErrorKind::EngineBug ? kPropertyFailure : kInputError;
  } catch (const std::exception& e) {
    std::cout << json{{"error", "InputError"}, {"detail", e.what()}}.dump() << '\n';
    return kInputError;
  }
  return kInputError;
}
