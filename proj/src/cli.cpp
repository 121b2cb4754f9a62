#include "pgd/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "pgd/code.hpp"
#include "pgd/design.hpp"
#include "pgd/dsrg.hpp"
#include "pgd/errors.hpp"
#include "pgd/graph.hpp"
#include "pgd/hamming.hpp"
#include "pgd/linalg.hpp"
#include "pgd/scheme.hpp"

namespace pgd::cli {

using nlohmann::json;

namespace {

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ' ';
    out += args[i];
  }
  return out;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error("cannot read file: " + path);
  return buf.str();
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pgd_params_json(const PgdParams& p) {
  return json{{"v", p.v}, {"k", p.k}, {"alpha", p.alpha}, {"beta", p.beta}};
}

json pgd_certificate_json(const PgdCertificate& c) {
  return json{{"v", c.v},         {"b", c.b},       {"k", c.k},
              {"r", c.r},         {"alpha", c.alpha}, {"beta", c.beta},
              {"degenerate", c.degenerate}};
}

json dsrg_certificate_json(const DsrgCertificate& c) {
  return json{{"v", c.v}, {"k", c.k}, {"t", c.t},
              {"lambda", c.lambda}, {"mu", c.mu}};
}

json valencies_json(const std::vector<std::int64_t>& k) {
  json out = json::array();
  for (auto v : k) out.push_back(v);
  return out;
}

// Complete scheme on m points: classes I and J - I (just I when m = 1).
AssociationScheme complete_scheme(std::int64_t m) {
  if (m < 1) throw BadInput("a complete scheme needs at least one point");
  auto n = static_cast<std::size_t>(m);
  std::vector<IntMatrix> classes;
  classes.push_back(IntMatrix::identity(n));
  if (m > 1)
    classes.push_back(subtract(IntMatrix::ones(n, n), IntMatrix::identity(n)));
  return scheme_certify(std::move(classes));
}

// "1,4,7;2,5;3,6" -> {{1,4,7},{2,5},{3,6}}.  Spaces are tolerated.
std::vector<std::vector<std::size_t>> parse_class_spec(
    const std::string& spec) {
  std::vector<std::vector<std::size_t>> parts;
  std::string cleaned;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (cleaned.empty()) throw BadInput("empty class specification");
  std::istringstream groups(cleaned);
  std::string group;
  while (std::getline(groups, group, ';')) {
    if (group.empty())
      throw BadInput("empty part in class specification: " + spec);
    std::vector<std::size_t> part;
    std::istringstream tokens(group);
    std::string token;
    while (std::getline(tokens, token, ',')) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        throw BadInput("bad weight '" + token + "' in class specification");
      }
      if (used != token.size() || value < 1)
        throw BadInput("bad weight '" + token + "' in class specification");
      part.push_back(static_cast<std::size_t>(value));
    }
    if (part.empty())
      throw BadInput("empty part in class specification: " + spec);
    parts.push_back(std::move(part));
  }
  return parts;
}

std::string indent_block(const std::string& text) {
  std::string out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out += "  " + line + "\n";
  return out;
}

}  // namespace

std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

DispatchResult dispatch(const std::vector<std::string>& args) {
  DispatchResult result;
  Report& rep = result.report;
  rep.command = join_args(args);

  bool allow_large = false;
  std::string format = "json";  // validated here; consumed by run()

  // Library-side enumeration cap honouring --allow-large.
  auto cap = [&allow_large]() -> std::int64_t {
    return allow_large ? std::numeric_limits<std::int64_t>::max()
                       : kDefaultSchemeCap;
  };
  // Constructions at or above the default cap need --allow-large.
  auto gate_points = [&allow_large](std::int64_t points) {
    if (!allow_large && points >= kDefaultSchemeCap)
      throw SizeCap("construction has " + std::to_string(points) +
                    " points; pass --allow-large to proceed");
  };
  // Records an input file in the provenance block.
  auto track = [&rep](const std::string& path) {
    const std::string bytes = read_file_bytes(path);
    rep.provenance.push_back(json{{"path", path},
                                  {"bytes", bytes.size()},
                                  {"fnv1a64", fnv1a64_hex(bytes)}});
  };

  CLI::App app{"exact certification of partial geometric designs, association "
               "schemes and directed strongly regular graphs",
               "pgdtool"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "print help for every command");
  app.add_option("--format", format, "report format (default json)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--allow-large", allow_large,
               "permit constructions with at least " +
                   std::to_string(kDefaultSchemeCap) + " points");

  auto add_sub = [](CLI::App* parent, const std::string& name,
                    const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // ---------------------------------------------------------------- construct
  CLI::App* construct =
      add_sub(&app, "construct", "build schemes, graphs and codes");
  construct->require_subcommand(1);

  {
    auto* c = add_sub(construct, "hamming", "Hamming scheme H(d, q)");
    auto d = std::make_shared<std::int64_t>(0);
    auto q = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--d", *d, "word length")->required();
    c->add_option("--q", *q, "alphabet size")->required();
    c->add_option("--out", *out, "write the relation matrix to this file");
    c->callback([&, d, q, out] {
      if (*d >= 1 && *q >= 2) gate_points(checked_pow(*q, *d));
      AssociationScheme s = hamming_scheme(*d, *q, cap());
      rep.payload["points"] = s.order();
      rep.payload["classes"] = s.classes();
      rep.payload["valencies"] = valencies_json(s.valencies());
      if (!out->empty()) {
        save_scheme(*out, s);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(construct, "ksd",
                      "Hamming fusion scheme over GF(3) with weight classes "
                      "taken modulo 3 (parameter l, word length 2l+1)");
    auto l = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--l", *l, "family index (word length 2l+1)")->required();
    c->add_option("--out", *out, "write the relation matrix to this file");
    c->callback([&, l, out] {
      if (*l >= 1) gate_points(checked_pow(3, 2 * *l + 1));
      AssociationScheme s = ksd_scheme(*l, cap());
      rep.payload["points"] = s.order();
      rep.payload["classes"] = s.classes();
      rep.payload["valencies"] = valencies_json(s.valencies());
      if (!out->empty()) {
        save_scheme(*out, s);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(construct, "multipartite",
                      "complete multipartite graph with c parts of size n");
    auto cparts = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--c", *cparts, "number of parts")->required();
    c->add_option("--n", *n, "part size")->required();
    c->add_option("--out", *out, "write the adjacency matrix to this file");
    c->callback([&, cparts, n, out] {
      if (*cparts >= 1 && *n >= 1) gate_points(checked_mul(*cparts, *n));
      IntMatrix a = complete_multipartite(*cparts, *n);
      rep.payload["parts"] = *cparts;
      rep.payload["part_size"] = *n;
      rep.payload["vertices"] = a.rows();
      if (auto srg = srg_certify(a)) {
        rep.payload["srg"] = json{{"v", srg->v},
                                  {"k", srg->k},
                                  {"lambda", srg->lambda},
                                  {"mu", srg->mu}};
      }
      if (!out->empty()) {
        save_matrix(*out, a);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(construct, "wreath",
                      "wreath product of complete schemes on m and n points");
    auto m = std::make_shared<std::int64_t>(0);
    auto n = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--m", *m, "inner point count")->required();
    c->add_option("--n", *n, "outer point count")->required();
    c->add_option("--out", *out, "write the relation matrix to this file");
    c->callback([&, m, n, out] {
      if (*m >= 1 && *n >= 1) gate_points(checked_mul(*m, *n));
      AssociationScheme s = wreath(complete_scheme(*m), complete_scheme(*n));
      rep.payload["points"] = s.order();
      rep.payload["classes"] = s.classes();
      rep.payload["valencies"] = valencies_json(s.valencies());
      if (*n >= 2) {
        // The outermost class is the incidence matrix of a partial
        // geometric design; certify it and report the closed form.
        const IntMatrix& last = s.adjacency(s.classes());
        PgdCertificate cert =
            pgd_certify(adjacency_to_incidence(last, false));
        rep.payload["pgd"] = pgd_certificate_json(cert);
        rep.payload["pgd_predicted"] = pgd_params_json(wreath_pgd(*m, *n));
      }
      if (!out->empty()) {
        save_scheme(*out, s);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(construct, "family-code",
                      "ternary linear [2l+3, 2l+1] code of the family");
    auto l = std::make_shared<std::int64_t>(0);
    auto out = std::make_shared<std::string>();
    c->add_option("--l", *l, "family index")->required();
    c->add_option("--out", *out, "write the generator matrix to this file");
    c->callback([&, l, out] {
      LinearCode code = family_code(*l);
      rep.payload["modulus"] = code.modulus();
      rep.payload["length"] = code.length();
      rep.payload["dimension"] = code.dimension();
      if (!out->empty()) {
        save_code(*out, code);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  // ------------------------------------------------------------------- verify
  CLI::App* verify =
      add_sub(&app, "verify", "certify objects stored in files");
  verify->require_subcommand(1);

  {
    auto* c = add_sub(verify, "scheme",
                      "certify the axioms for a relation-matrix file");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "relation matrix file")->required();
    c->callback([&, file] {
      track(*file);
      AssociationScheme s = load_scheme(*file);
      rep.payload["order"] = s.order();
      rep.payload["classes"] = s.classes();
      rep.payload["valencies"] = valencies_json(s.valencies());
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(verify, "pgd",
                      "certify one class of a scheme as a partial geometric "
                      "design");
    auto file = std::make_shared<std::string>();
    auto cls = std::make_shared<std::int64_t>(0);
    auto add_identity = std::make_shared<bool>(false);
    c->add_option("--scheme", *file, "relation matrix file")->required();
    c->add_option("--class", *cls, "class index (1..d)")->required();
    c->add_flag("--add-identity", *add_identity,
                "certify A_i + I instead of A_i");
    c->callback([&, file, cls, add_identity] {
      track(*file);
      AssociationScheme s = load_scheme(*file);
      if (*cls < 1 || static_cast<std::size_t>(*cls) > s.classes())
        throw BadInput("class index " + std::to_string(*cls) +
                       " out of range 1.." + std::to_string(s.classes()));
      IncidenceStructure design = adjacency_to_incidence(
          s.adjacency(static_cast<std::size_t>(*cls)), *add_identity);
      rep.payload["class"] = *cls;
      rep.payload["add_identity"] = *add_identity;
      rep.payload["certificate"] = pgd_certificate_json(pgd_certify(design));
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(verify, "srg",
                      "certify an adjacency-matrix file as strongly regular");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "adjacency matrix file")->required();
    c->callback([&, file] {
      track(*file);
      IntMatrix a = load_matrix(*file);
      auto srg = srg_certify(a);
      if (!srg) {
        rep.payload["error"] = "the graph is not strongly regular";
        rep.ok = false;
        return;
      }
      rep.payload["certificate"] = json{{"v", srg->v},
                                        {"k", srg->k},
                                        {"lambda", srg->lambda},
                                        {"mu", srg->mu}};
      if (auto cubic = srg_pgd_params(*srg))
        rep.payload["pgd_params"] =
            json{{"alpha", cubic->first}, {"beta", cubic->second}};
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(verify, "dsrg",
                      "certify an adjacency-matrix file as a directed "
                      "strongly regular graph");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "adjacency matrix file")->required();
    c->callback([&, file] {
      track(*file);
      Digraph g{load_matrix(*file)};
      DsrgOutcome outcome = dsrg_certify(g);
      if (!outcome.certificate) {
        rep.payload["violation"] = outcome.violation;
        rep.ok = false;
        return;
      }
      rep.payload["certificate"] =
          dsrg_certificate_json(*outcome.certificate);
      rep.ok = true;
    });
  }

  // --------------------------------------------------------------------- code
  CLI::App* code_cmd = add_sub(&app, "code", "linear-code computations");
  code_cmd->require_subcommand(1);

  {
    auto* c = add_sub(code_cmd, "info",
                      "length, dimension, weight distribution and dual "
                      "distance of a generator-matrix file");
    auto file = std::make_shared<std::string>();
    c->add_option("--file", *file, "generator matrix file")->required();
    c->callback([&, file] {
      track(*file);
      LinearCode code = load_code(*file);
      rep.payload["modulus"] = code.modulus();
      rep.payload["length"] = code.length();
      rep.payload["dimension"] = code.dimension();
      rep.payload["weight_distribution"] =
          valencies_json(weight_distribution(code, cap()));
      auto dd = dual_distance(code, cap());
      rep.payload["dual_distance"] = dd ? json(*dd) : json(nullptr);
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(code_cmd, "dual", "dual code of a generator-matrix file");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--file", *file, "generator matrix file")->required();
    c->add_option("--out", *out, "write the dual generator to this file");
    c->callback([&, file, out] {
      track(*file);
      LinearCode d = dual(load_code(*file));
      rep.payload["modulus"] = d.modulus();
      rep.payload["length"] = d.length();
      rep.payload["dimension"] = d.dimension();
      rep.payload["weight_distribution"] =
          valencies_json(weight_distribution(d, cap()));
      if (!out->empty()) {
        save_code(*out, d);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(code_cmd, "oa-strength",
                      "maximal orthogonal-array strength of the codeword "
                      "array (or of an array file with --array)");
    auto file = std::make_shared<std::string>();
    auto as_array = std::make_shared<bool>(false);
    c->add_option("--file", *file, "generator matrix or array file")
        ->required();
    c->add_flag("--array", *as_array,
                "treat the input as an orthogonal-array file");
    c->callback([&, file, as_array] {
      track(*file);
      OrthogonalArrayView oa =
          *as_array ? load_oa(*file) : oa_from_code(load_code(*file), cap());
      auto [strength, lambda] = oa_strength(oa);
      rep.payload["runs"] = oa.run_count();
      rep.payload["columns"] = oa.columns();
      rep.payload["symbols"] = oa.symbols();
      rep.payload["strength"] = strength;
      rep.payload["lambda"] = lambda;
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(code_cmd, "scheme",
                      "distance-class scheme of a code under a weight "
                      "partition such as \"1,4,7;2,5;3,6\"");
    auto file = std::make_shared<std::string>();
    auto spec = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--file", *file, "generator matrix file")->required();
    c->add_option("--classes", *spec,
                  "semicolon-separated weight classes")->required();
    c->add_option("--out", *out, "write the relation matrix to this file");
    c->callback([&, file, spec, out] {
      track(*file);
      LinearCode code = load_code(*file);
      AssociationScheme s =
          distance_class_scheme(code, parse_class_spec(*spec), cap());
      rep.payload["order"] = s.order();
      rep.payload["classes"] = s.classes();
      rep.payload["valencies"] = valencies_json(s.valencies());
      if (!out->empty()) {
        save_scheme(*out, s);
        rep.payload["file"] = *out;
      }
      rep.ok = true;
    });
  }

  // --------------------------------------------------------------------- dsrg
  CLI::App* dsrg_cmd = add_sub(
      &app, "dsrg", "directed graphs on the flags or antiflags of a design");
  dsrg_cmd->require_subcommand(1);

  for (const bool flags : {true, false}) {
    auto* c = add_sub(dsrg_cmd, flags ? "flag" : "antiflag",
                      flags ? "directed graph on the flags of a design"
                            : "directed graph on the antiflags of a design");
    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--design", *file, "incidence matrix file")->required();
    c->add_option("--out", *out, "write the adjacency matrix to this file");
    c->callback([&, file, out, flags] {
      track(*file);
      IncidenceStructure design{load_matrix(*file)};
      Digraph g = flags ? flag_graph(design, allow_large)
                        : antiflag_graph(design, allow_large);
      const char* source = flags ? "flag" : "antiflag";
      rep.payload["vertices"] = g.vertices();
      if (!out->empty()) {
        save_matrix(*out, g.adjacency());
        rep.payload["file"] = *out;
      }
      DsrgOutcome outcome = dsrg_certify(g);
      if (!outcome.certificate) {
        rep.payload["violation"] = outcome.violation;
        rep.payload["source"] = source;
        rep.ok = false;
        return;
      }
      json cert = dsrg_certificate_json(*outcome.certificate);
      cert["source"] = source;
      rep.payload["certificate"] = std::move(cert);
      rep.ok = true;
    });
  }

  // ------------------------------------------------------------------ catalog
  CLI::App* catalog =
      add_sub(&app, "catalog", "closed-form parameter catalogues");
  catalog->require_subcommand(1);

  {
    auto* c = add_sub(catalog, "table1",
                      "directed strongly regular graph parameters predicted "
                      "for the scheme family (six rows per index)");
    auto max_l = std::make_shared<std::int64_t>(0);
    c->add_option("--max-l", *max_l, "largest family index")->required();
    c->callback([&, max_l] {
      std::vector<DsrgCertificate> rows = table1_catalog(*max_l);
      json out = json::array();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        json row = dsrg_certificate_json(rows[i]);
        row["l"] = static_cast<std::int64_t>(i / 6 + 1);
        row["design"] = static_cast<std::int64_t>((i % 6) / 2 + 1);
        row["source"] = (i % 2 == 0) ? "antiflag" : "flag";
        out.push_back(std::move(row));
      }
      rep.payload["rows"] = std::move(out);
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(catalog, "cor55",
                      "predicted design parameters and intersection matrices "
                      "of the weight-class fusion scheme");
    auto l = std::make_shared<std::int64_t>(0);
    c->add_option("--l", *l, "family index")->required();
    c->callback([&, l] {
      auto tuples = cor55_params(*l);
      auto b = ksd_predicted_B(*l);
      json tj = json::array();
      for (const auto& t : tuples) tj.push_back(pgd_params_json(t));
      json bj = json::array();
      for (const auto& m : b) bj.push_back(matrix_json(m));
      rep.payload["l"] = *l;
      rep.payload["tuples"] = std::move(tj);
      rep.payload["intersection_matrices"] = std::move(bj);
      rep.ok = true;
    });
  }

  {
    auto* c = add_sub(catalog, "z-family",
                      "eigenmatrix and design parameters of the three-class "
                      "family on 3m^2 points");
    auto m = std::make_shared<std::int64_t>(0);
    c->add_option("--m", *m, "family parameter (multiple of 3, at least 3)")
        ->required();
    c->callback([&, m] {
      auto tuples = z_family_params(*m);
      json tj = json::array();
      for (const auto& t : tuples) tj.push_back(pgd_params_json(t));
      rep.payload["m"] = *m;
      rep.payload["eigenmatrix"] = matrix_json(z_family_eigenmatrix(*m));
      rep.payload["tuples"] = std::move(tj);
      rep.ok = true;
    });
  }

  // -------------------------------------------------------------------- parse
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pgdtool");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    result.exit_code = rep.ok ? 0 : 1;
  } catch (const CLI::CallForAllHelp&) {
    rep.ok = true;
    rep.payload = json{{"help", app.help("", CLI::AppFormatMode::All)}};
    result.exit_code = 0;
  } catch (const CLI::Success&) {
    rep.ok = true;
    rep.payload = json{{"help", app.help()}};
    result.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    rep.ok = false;
    rep.payload = json{{"error", std::string(e.what())},
                       {"hint", "run 'pgdtool --help-all' for the grammar"}};
    result.exit_code = 2;
  } catch (const NotAScheme& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    rep.payload["axiom"] = e.axiom;
    rep.payload["witness"] = json::array({e.x, e.y});
    result.exit_code = 1;
  } catch (const NotPartialGeometric& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    rep.payload["witness"] = json{{"point", e.point},
                                  {"block", e.block},
                                  {"found", e.found},
                                  {"expected", e.expected}};
    result.exit_code = 1;
  } catch (const NotTactical& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    rep.payload["witness"] = json{{"kind", e.row_fault ? "row" : "column"},
                                  {"index", e.index}};
    result.exit_code = 1;
  } catch (const UncoveredDistance& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    rep.payload["distance"] = e.distance;
    result.exit_code = 1;
  } catch (const pgd::ParseError& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    if (e.line) rep.payload["line"] = e.line;
    result.exit_code = 1;
  } catch (const Error& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    result.exit_code = 1;
  } catch (const std::exception& e) {
    rep.ok = false;
    rep.payload["error"] = std::string(e.what());
    result.exit_code = 1;
  }
  return result;
}

std::string emit(const Report& report, const std::string& format) {
  if (format == "json") {
    json j;
    j["command"] = report.command;
    j["status"] = report.ok ? "ok" : "fail";
    j["payload"] = report.payload;
    j["provenance"] = report.provenance;
    return j.dump(2) + "\n";
  }
  if (format == "text") {
    std::string out;
    out += "command: " + report.command + "\n";
    out += std::string("status: ") + (report.ok ? "ok" : "fail") + "\n";
    out += "payload:\n" + indent_block(report.payload.dump(2));
    out += "provenance:\n" + indent_block(report.provenance.dump(2));
    return out;
  }
  throw BadInput("unknown report format: " + format);
}

int run(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);

  // The format also matters on parse failure, so pre-scan for it; invalid
  // values fall back to JSON and are rejected by dispatch with exit code 2.
  std::string format = "json";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format" && i + 1 < args.size()) format = args[i + 1];
    else if (args[i].rfind("--format=", 0) == 0) format = args[i].substr(9);
  }
  if (format != "json" && format != "text") format = "json";

  DispatchResult result = dispatch(args);
  if (result.report.payload.contains("help") && result.exit_code == 0) {
    std::cout << result.report.payload["help"].get<std::string>();
    return 0;
  }
  std::cout << emit(result.report, format);
  return result.exit_code;
}

}  // namespace pgd::cli
