#include "topo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "topo/constructions.hpp"
#include "topo/enumeration.hpp"
#include "topo/error.hpp"
#include "topo/graph6.hpp"
#include "topo/indices.hpp"
#include "topo/verification.hpp"

namespace topo::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, g6, text };

Format parse_format(const std::string& text, std::initializer_list<Format> allowed) {
  static const std::map<std::string, Format> names{
      {"json", Format::json}, {"csv", Format::csv}, {"g6", Format::g6}, {"text", Format::text}};
  const auto it = names.find(text);
  if (it == names.end() || std::find(allowed.begin(), allowed.end(), it->second) == allowed.end()) {
    throw UsageError("format '" + text + "' is not available for this subcommand");
  }
  return it->second;
}

template <class T, class Parse>
T parse_enum(const std::string& text, Parse parse, const char* what) {
  if (auto v = parse(text)) return *v;
  throw UsageError(std::string("unknown ") + what + " '" + text + "'");
}

Json bundle_json(const IndexBundle& b) {
  return Json{{"wiener", b.wiener},
              {"harary", b.harary.to_string()},
              {"m1", b.m1},
              {"m2", b.m2},
              {"pi1", to_string(b.pi1)},
              {"pi2", to_string(b.pi2)}};
}

Json witnesses_json(const std::vector<CanonicalForm>& forms) {
  Json out = Json::array();
  for (const auto& f : forms) out.push_back(f.graph6);
  return out;
}

Json claim_json(const ClaimRecord& c) {
  Json j{{"id", c.id},
         {"class", c.graph_class},
         {"n", c.n},
         {"range", c.range},
         {"status", std::string(to_string(c.status))},
         {"value", c.value},
         {"witnesses", c.witnesses},
         {"wall_ms", c.wall_ms}};
  if (!c.counterexample.empty()) j["counterexample"] = c.counterexample;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json profile_json(const DistanceProfile& p) {
  Json j = Json::object();
  for (const auto& [d, k] : p.multiplicity) j[std::to_string(d)] = k;
  return j;
}

Json claim1_json(const Claim1Report& r) {
  return Json{{"a", r.a},
              {"b", r.b},
              {"n", r.n},
              {"x", r.x},
              {"y", r.y},
              {"s", profile_json(r.s)},
              {"t", profile_json(r.t)},
              {"low_range_ok", r.low_range_ok},
              {"high_range_ok", r.high_range_ok},
              {"separation_ok", r.separation_ok},
              {"reciprocal_ok", r.reciprocal_ok},
              {"reciprocal_margin", r.reciprocal_margin.to_string()}};
}

std::string join(const std::vector<CanonicalForm>& forms, char sep) {
  std::string out;
  for (const auto& f : forms) {
    if (!out.empty()) out += sep;
    out += f.graph6;
  }
  return out;
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

Graph load_graph(const std::string& input, const std::string& g6, const std::string& family, int n) {
  const int given = !input.empty() + !g6.empty() + !family.empty();
  if (given != 1) throw UsageError("give exactly one of --input, --g6, --family");
  if (!g6.empty()) return from_graph6(g6);
  if (!family.empty()) {
    return build({parse_enum<FamilyKind>(family, parse_family_kind, "family"), std::max(n, 0), {}});
  }
  std::ifstream in(input);
  if (!in) throw UsageError("cannot open '" + input + "'");
  return read_edge_list(in);
}

struct Options {
  std::string format;
  std::string output;

  // indices
  std::string input, g6, family;
  int n = -1;
  // enumerate / extremal
  std::string graph_class;
  bool dedupe = false;
  std::string index, direction;
  // verify
  int eulerian_max = 9;
  int twoec_max = 8;
  // claim1
  int a = -1, b = -1, n_max = -1;
  // crossing
  int from = 0, to = 0;
  // family
  std::string kind;
  std::vector<int> lengths;
};

int cmd_indices(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format.empty() ? "text" : o.format, {Format::text, Format::json, Format::csv});
  const IndexBundle b = compute_indices(load_graph(o.input, o.g6, o.family, o.n));
  switch (fmt) {
    case Format::json:
      out << bundle_json(b).dump(2) << '\n';
      break;
    case Format::csv:
      out << "wiener,harary,m1,m2,pi1,pi2\n"
          << b.wiener << ',' << b.harary << ',' << b.m1 << ',' << b.m2 << ',' << to_string(b.pi1) << ','
          << to_string(b.pi2) << '\n';
      break;
    default:
      out << "wiener=" << b.wiener << " harary=" << b.harary << " m1=" << b.m1 << " m2=" << b.m2
          << " pi1=" << to_string(b.pi1) << " pi2=" << to_string(b.pi2) << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const EnumSpec spec{o.n, parse_enum<GraphClass>(o.graph_class, parse_graph_class, "class"), o.dedupe};
  const Format fmt = parse_format(o.format.empty() ? "g6" : o.format, {Format::g6, Format::json});
  if (fmt == Format::g6) {
    enumerate(spec, [&](const Graph& g) { out << to_graph6(g) << '\n'; });
    return kExitOk;
  }
  Json graphs = Json::array();
  const EnumStats stats = enumerate(spec, [&](const Graph& g) { graphs.push_back(to_graph6(g)); });
  out << Json{{"class", std::string(to_string(spec.graph_class))},
              {"n", spec.n},
              {"dedupe", spec.dedupe},
              {"candidates", stats.candidates},
              {"emitted", stats.emitted},
              {"graphs", graphs}}
             .dump(2)
      << '\n';
  return kExitOk;
}

int cmd_extremal(const Options& o, std::ostream& out) {
  const auto cls = parse_enum<GraphClass>(o.graph_class, parse_graph_class, "class");
  const auto idx = parse_enum<IndexKind>(o.index, parse_index_kind, "index");
  const auto dir = parse_enum<Direction>(o.direction, parse_direction, "direction");
  const Format fmt = parse_format(o.format.empty() ? "text" : o.format, {Format::text, Format::json, Format::csv});
  const ExtremalReport r = extremal_scan(cls, o.n, idx, dir);
  const std::string second = r.second_value ? r.second_value->to_string() : "";
  switch (fmt) {
    case Format::json:
      out << Json{{"class", std::string(to_string(r.graph_class))},
                  {"n", r.n},
                  {"index", std::string(to_string(r.index))},
                  {"direction", std::string(to_string(r.direction))},
                  {"best_value", r.best_value.to_string()},
                  {"best_witnesses", witnesses_json(r.best_witnesses)},
                  {"second_value", r.second_value ? Json(second) : Json(nullptr)},
                  {"second_witnesses", witnesses_json(r.second_witnesses)},
                  {"scan_size", r.scan_size},
                  {"class_members", r.class_members}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      out << "class,n,index,direction,rank,value,witness\n";
      for (const auto& w : r.best_witnesses) {
        out << to_string(r.graph_class) << ',' << r.n << ',' << to_string(r.index) << ',' << to_string(r.direction)
            << ",best," << r.best_value << ',' << w.graph6 << '\n';
      }
      for (const auto& w : r.second_witnesses) {
        out << to_string(r.graph_class) << ',' << r.n << ',' << to_string(r.index) << ',' << to_string(r.direction)
            << ",second," << second << ',' << w.graph6 << '\n';
      }
      break;
    default:
      out << to_string(r.graph_class) << " n=" << r.n << ' ' << to_string(r.index) << ' ' << to_string(r.direction)
          << '\n'
          << "  best   " << r.best_value << " [" << join(r.best_witnesses, ' ') << "]\n";
      if (r.second_value) out << "  second " << second << " [" << join(r.second_witnesses, ' ') << "]\n";
      out << "  members " << r.class_members << " of " << r.scan_size << " candidates\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format.empty() ? "json" : o.format, {Format::json, Format::text, Format::csv});
  const VerificationReport report = theorem_suite(o.eulerian_max, o.twoec_max);
  switch (fmt) {
    case Format::json: {
      Json claims = Json::array();
      for (const auto& c : report.claims) claims.push_back(claim_json(c));
      out << Json{{"claims", claims}, {"passed", report.passed()}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "id,class,n,status,value,counterexample,wall_ms\n";
      for (const auto& c : report.claims) {
        out << c.id << ',' << c.graph_class << ',' << c.n << ',' << to_string(c.status) << ",\"" << c.value << "\","
            << c.counterexample << ',' << c.wall_ms << '\n';
      }
      break;
    default:
      for (const auto& c : report.claims) {
        out << '[' << to_string(c.status) << "] " << c.id << " n=" << c.n << " value=" << c.value;
        if (!c.counterexample.empty()) out << " counterexample=" << c.counterexample;
        if (!c.note.empty()) out << " (" << c.note << ')';
        out << '\n';
      }
  }
  return report.passed() ? kExitOk : kExitClaimFailed;
}

int cmd_claim1(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format.empty() ? "text" : o.format, {Format::text, Format::json, Format::csv});
  std::vector<Claim1Report> reports;
  if (o.n_max >= 0) {
    if (o.a >= 0 || o.b >= 0) throw UsageError("--n-max excludes --a/--b");
    for (int a = 3; 2 * a - 1 <= o.n_max; ++a) {
      for (int b = a; a + b - 1 <= o.n_max; ++b) reports.push_back(claim1_check(a, b));
    }
  } else {
    if (o.a < 0 || o.b < 0) throw UsageError("claim1 needs --a and --b, or --n-max");
    reports.push_back(claim1_check(o.a, o.b));
  }
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(claim1_json(r));
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "a,b,n,low_range_ok,high_range_ok,separation_ok,reciprocal_ok,reciprocal_margin\n";
      for (const auto& r : reports) {
        out << r.a << ',' << r.b << ',' << r.n << ',' << yes_no(r.low_range_ok) << ',' << yes_no(r.high_range_ok)
            << ',' << yes_no(r.separation_ok) << ',' << yes_no(r.reciprocal_ok) << ',' << r.reciprocal_margin << '\n';
      }
      break;
    default:
      for (const auto& r : reports) {
        out << "a=" << r.a << " b=" << r.b << " n=" << r.n << " separation_ok=" << yes_no(r.separation_ok)
            << " reciprocal_ok=" << yes_no(r.reciprocal_ok) << " margin=" << r.reciprocal_margin << '\n';
      }
  }
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.reciprocal_ok; });
  return ok ? kExitOk : kExitClaimFailed;
}

int cmd_crossing(const Options& o, std::ostream& out) {
  const Format fmt = parse_format(o.format.empty() ? "csv" : o.format, {Format::csv, Format::json, Format::text});
  const auto rows = crossing_table(o.from, o.to);
  switch (fmt) {
    case Format::json: {
      Json arr = Json::array();
      for (const auto& r : rows) {
        arr.push_back(Json{{"n", r.n}, {"h_g1", r.h_g1.to_string()}, {"h_g2", r.h_g2.to_string()}, {"sign", r.sign}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case Format::text:
      for (const auto& r : rows) {
        out << "n=" << r.n << " H(g1)=" << r.h_g1 << " H(g2)=" << r.h_g2 << " sign=" << r.sign << '\n';
      }
      break;
    default:
      out << "n,h_g1,h_g2,sign\n";
      for (const auto& r : rows) out << r.n << ',' << r.h_g1 << ',' << r.h_g2 << ',' << r.sign << '\n';
  }
  return kExitOk;
}

int cmd_family(const Options& o, std::ostream& out) {
  const FamilySpec spec{parse_enum<FamilyKind>(o.kind, parse_family_kind, "family"), std::max(o.n, 0), o.lengths};
  const Format fmt = parse_format(o.format.empty() ? "g6" : o.format, {Format::g6, Format::text, Format::json});
  const Graph g = build(spec);
  switch (fmt) {
    case Format::text:
      write_edge_list(out, g);
      break;
    case Format::json:
      out << Json{{"kind", std::string(to_string(spec.kind))},
                  {"n", g.order()},
                  {"m", g.size()},
                  {"graph6", to_graph6(g)}}
                 .dump(2)
          << '\n';
      break;
    default:
      out << to_graph6(g) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exhaustive verification of distance and degree index bounds", "topoverify"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "json|csv|g6|text");
  app.add_option("--output", o.output, "write the report to this file");
  app.fallthrough();

  std::function<int(const Options&, std::ostream&)> handler;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* indices = sub("indices", "print the index bundle of one graph", cmd_indices);
  indices->add_option("--input", o.input, "edge-list file");
  indices->add_option("--g6", o.g6, "graph6 text");
  indices->add_option("--family", o.family, "construction kind");
  indices->add_option("--n", o.n, "order of the construction");

  auto* enumerate_cmd = sub("enumerate", "stream the members of a class as graph6", cmd_enumerate);
  enumerate_cmd->add_option("--class", o.graph_class, "eulerian|twoec|twoconn|connected")->required();
  enumerate_cmd->add_option("--n", o.n, "order")->required();
  enumerate_cmd->add_flag("--dedupe", o.dedupe, "one graph per isomorphism class");

  auto* extremal = sub("extremal", "exhaustive extremal scan", cmd_extremal);
  extremal->add_option("--class", o.graph_class, "eulerian|twoec|twoconn|connected")->required();
  extremal->add_option("--n", o.n, "order")->required();
  extremal->add_option("--index", o.index, "wiener|harary|m1|m2|pi1|pi2")->required();
  extremal->add_option("--direction", o.direction, "min|max")->required();

  auto* verify = sub("verify", "run the full theorem suite", cmd_verify);
  verify->add_option("--eulerian-max", o.eulerian_max, "largest Eulerian order")->capture_default_str();
  verify->add_option("--twoec-max", o.twoec_max, "largest 2-edge-connected order")->capture_default_str();

  auto* claim1 = sub("claim1", "compare cycle-plus-path distances against the cycle", cmd_claim1);
  claim1->add_option("--a", o.a, "cycle part order");
  claim1->add_option("--b", o.b, "remainder order");
  claim1->add_option("--n-max", o.n_max, "every split with a+b-1 <= N");

  auto* crossing = sub("crossing", "Harary values of the G1/G2 pair", cmd_crossing);
  crossing->add_option("--from", o.from, "first order")->required();
  crossing->add_option("--to", o.to, "last order")->required();

  auto* family = sub("family", "print a construction", cmd_family);
  family->add_option("--kind", o.kind, "cycle|path|complete|complete_minus_matching|bouquet|g1|g2|h")->required();
  family->add_option("--n", o.n, "order");
  family->add_option("--lengths", o.lengths, "bouquet cycle lengths")->delimiter(',');

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
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream* sink = &out;
    if (!o.output.empty()) {
      file.open(o.output);
      if (!file) throw UsageError("cannot write '" + o.output + "'");
      sink = &file;
    }
    const int code = handler(o, *sink);
    sink->flush();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace topo::cli
