#include "cayley4p/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cayley4p/errors.hpp"
#include "cayley4p/oracle.hpp"

namespace cayley4p {

namespace {

bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return false;
  }
  out = std::stoi(s);
  return true;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Digraph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Digraph g;
  bool have_header = false;
  const auto vertex = [&](const std::string& s) {
    int v = -1;
    if (!parse_int(s, v)) throw ParseError(lineno, "bad vertex '" + s + "'");
    if (v >= g.order()) throw ParseError(lineno, "vertex " + s + " out of range");
    return v;
  };
  const auto arc = [&](int a, int b) {
    if (g.has_arc(a, b)) {
      throw ParseError(lineno, "duplicate arc " + std::to_string(a) + " " + std::to_string(b));
    }
    g.add_arc(a, b);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto t = tokens(line);
    if (t.empty()) continue;
    if (!have_header) {
      int n = -1;
      if (t.size() != 1 || t[0].rfind("n=", 0) != 0 || !parse_int(t[0].substr(2), n)) {
        throw ParseError(lineno, "expected header n=<int>");
      }
      if (n > kMaxDegree) throw ParseError(lineno, "too many vertices");
      g = Digraph(n);
      have_header = true;
      continue;
    }
    if (t.size() == 2) {
      arc(vertex(t[0]), vertex(t[1]));
    } else if (t.size() == 3 && t[0] == "u") {
      const int a = vertex(t[1]), b = vertex(t[2]);
      arc(a, b);
      if (a != b) arc(b, a);
    } else {
      throw ParseError(lineno, "malformed line");
    }
  }
  if (!have_header) throw ParseError(lineno, "missing header n=<int>");
  return g;
}

std::string format_graph(const Digraph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << '\n';
  for (const auto& [a, b] : g.arcs()) out << a << ' ' << b << '\n';
  return out.str();
}

nlohmann::json certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["cayley"] = true;
  j["p"] = cert.p;
  auto& lab = j["labeling"] = nlohmann::json::array();
  for (const auto& g : cert.labeling) lab.push_back(to_string(g));
  auto& s = j["connection_set"] = nlohmann::json::array();
  for (const auto& g : cert.connection_set.elements()) s.push_back(to_string(g));
  const char* names[3] = {"01.0", "10.0", "00.1"};
  for (std::size_t k = 0; k < 3; ++k) j["generators"][names[k]] = cert.generators[k].image_vector();
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate cert;
    cert.p = j.at("p").get<int>();
    for (const auto& g : j.at("labeling")) cert.labeling.push_back(parse_gelem(g.get<std::string>(), cert.p));
    std::vector<GElem> s;
    for (const auto& g : j.at("connection_set")) s.push_back(parse_gelem(g.get<std::string>(), cert.p));
    cert.connection_set = ConnectionSet(cert.p, std::move(s));
    const char* names[3] = {"01.0", "10.0", "00.1"};
    for (std::size_t k = 0; k < 3; ++k) {
      cert.generators[k] = Perm(j.at("generators").at(names[k]).get<std::vector<int>>());
    }
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad certificate: ") + e.what());
  }
}

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

std::optional<Certificate> represent(const Digraph& g) {
  const int p = prime_of_order(g.order());
  if (p == 0) return std::nullopt;
  if (p < 5) return exhaustive_small_p(g, p);
  return find_representation(g);
}

nlohmann::json perms_to_json(const std::vector<Perm>& perms) {
  auto a = nlohmann::json::array();
  for (const auto& g : perms) a.push_back(g.image_vector());
  return a;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cayley graphs over E4 x Cp: recognition, representation and isomorphism"};
  app.require_subcommand(1);

  std::string file, connset, cert_file;
  int p = 0;
  std::uint64_t budget = kDefaultElementBudget, seed = 0;
  bool all = false, shuffle = false;

  auto* recognize = app.add_subcommand("recognize", "print yes if the graph is Cayley over E4 x Cp");
  recognize->add_option("file", file, "edge-list file, - for stdin")->required();

  auto* represent_cmd = app.add_subcommand("represent", "print a Cayley representation certificate");
  represent_cmd->add_option("file", file)->required();
  represent_cmd->add_flag("--all", all, "every representation up to Cayley equivalence (p >= 5)");

  auto* isotest = app.add_subcommand("isotest", "isomorphism between Cay(G, S) and a graph");
  isotest->add_option("--connset", connset, "u1u0.z,...")->required();
  isotest->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "print Cay(G, S) in edge-list format");
  gen->add_option("--p", p)->required();
  gen->add_option("--connset", connset)->required();
  auto* shuffle_opt = gen->add_option("--shuffle", seed, "relabel vertices by a random permutation");

  auto* oracle = app.add_subcommand("oracle", "brute-force checks");
  oracle->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "check a certificate against a graph");
  verify->add_option("file", file)->required();
  verify->add_option("certificate", cert_file)->required();
  auto* semiregular = oracle->add_subcommand("semiregular", "automorphisms of cycle type p^(n/p)");
  semiregular->add_option("--p", p)->required();
  semiregular->add_option("--budget", budget);
  semiregular->add_option("file", file)->required();
  auto* regular = oracle->add_subcommand("regular", "regular E4 x Cp subgroups of Aut");
  regular->add_option("--budget", budget);
  regular->add_option("file", file)->required();
  auto* small = oracle->add_subcommand("small", "exhaustive solver for p = 2, 3");
  small->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  shuffle = shuffle_opt->count() > 0;

  try {
    if (gen->parsed()) {
      const auto S = parse_connection_set(connset, p);
      Digraph g = cayley_graph(p, S);
      if (shuffle) {
        std::vector<int> img(static_cast<std::size_t>(g.order()));
        std::iota(img.begin(), img.end(), 0);
        std::mt19937_64 rng(seed);
        std::shuffle(img.begin(), img.end(), rng);
        g = g.relabeled(Perm(img));
      }
      out << format_graph(g);
      return 0;
    }

    const Digraph g = parse_graph(read_input(file));

    if (recognize->parsed()) {
      const bool yes = represent(g).has_value();
      out << (yes ? "yes" : "no") << '\n';
      return yes ? 0 : 1;
    }
    if (represent_cmd->parsed()) {
      if (all) {
        const int q = prime_of_order(g.order());
        if (q < 5) throw InputError("--all needs 4p vertices with p >= 5");
        const auto report = solve(g, true);
        auto arr = nlohmann::json::array();
        for (const auto& c : report.all) arr.push_back(certificate_to_json(c));
        out << arr.dump() << '\n';
        return report.all.empty() ? 1 : 0;
      }
      const auto cert = represent(g);
      out << (cert ? certificate_to_json(*cert) : nlohmann::json{{"cayley", false}}).dump() << '\n';
      return cert ? 0 : 1;
    }
    if (isotest->parsed()) {
      const int q = prime_of_order(g.order());
      if (q == 0) throw InputError("vertex count must be 4p with p prime");
      const auto phi = iso_test(parse_connection_set(connset, q), g);
      if (!phi) {
        out << nlohmann::json{{"isomorphic", false}}.dump() << '\n';
        return 1;
      }
      out << nlohmann::json{{"isomorphic", true}, {"bijection", phi->image_vector()}}.dump() << '\n';
      return 0;
    }
    if (verify->parsed()) {
      const auto cert = certificate_from_json(nlohmann::json::parse(read_input(cert_file)));
      const bool ok = verify_certificate(g, cert);
      out << (ok ? "valid" : "invalid") << '\n';
      return ok ? 0 : 1;
    }
    if (semiregular->parsed()) {
      const auto r = brute_semiregular_p(g, p, budget);
      out << nlohmann::json{{"budget_exceeded", r.budget_exceeded},
                            {"aut_order", r.group_order.str()},
                            {"elements", perms_to_json(r.value)}}
                 .dump()
          << '\n';
      return r.budget_exceeded ? 1 : 0;
    }
    if (regular->parsed()) {
      const auto r = brute_regular_e4cp(g, budget);
      out << nlohmann::json{{"budget_exceeded", r.budget_exceeded},
                            {"aut_order", r.group_order.str()},
                            {"count", r.value.size()}}
                 .dump()
          << '\n';
      return r.budget_exceeded || r.value.empty() ? 1 : 0;
    }
    if (small->parsed()) {
      const int q = prime_of_order(g.order());
      if (q != 2 && q != 3) throw InputError("graph must have 8 or 12 vertices");
      const auto cert = exhaustive_small_p(g, q);
      out << (cert ? certificate_to_json(*cert) : nlohmann::json{{"cayley", false}}).dump() << '\n';
      return cert ? 0 : 1;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << app.help();
  return 2;
}

}  // namespace cayley4p
