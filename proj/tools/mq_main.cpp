#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "mq/error.hpp"
#include "mq/families.hpp"
#include "mq/io.hpp"
#include "mq/quiver.hpp"
#include "mq/rational.hpp"
#include "mq/rtrivial.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mq::Error(mq::ErrorKind::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out, std::ios::binary);
  if (!os) throw mq::Error(mq::ErrorKind::BadInput, "cannot write " + out);
  os << text;
}

struct CommonInput {
  std::string path;
  bool adjoinIdentity = false;
  std::size_t maxSize = 100000;

  mq::MonoidTable load() const {
    return mq::load_monoid(slurp(path), adjoinIdentity, maxSize);
  }
};

std::vector<std::string> lattice_names(int k) {
  std::vector<std::string> names;
  for (int X = 0; X < k; ++X) names.push_back("X" + std::to_string(X));
  return names;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure and quiver computations for finite monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  bool errorJson = false;
  app.add_option("--format", format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("-o,--output", output, "output file (default stdout)");
  app.add_flag("--error-json", errorJson,
               "report errors as JSON on stderr");

  CommonInput in;
  std::int64_t primeOpt = 0;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string engineName = "auto";
  bool check = false;

  auto addInput = [&](CLI::App* cmd) {
    cmd->add_option("input", in.path, "monoid/transformation/category JSON file")
        ->required();
    cmd->add_flag("--adjoin-identity", in.adjoinIdentity,
                  "adjoin a fresh identity to a table input");
    cmd->add_option("--max-size", in.maxSize, "closure size cap");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "generate a built-in monoid family");
  std::string famName;
  std::vector<std::string> famArgs;
  gen->add_option("family", famName, "family name")->required();
  gen->add_option("args", famArgs, "family parameters");

  auto* info = app.add_subcommand("info", "Green relation summary");
  addInput(info);

  auto* classifyCmd = app.add_subcommand("classify", "class membership flags");
  addInput(classifyCmd);

  auto* latticeCmd = app.add_subcommand("lattice", "support lattice");
  addInput(latticeCmd);

  auto* quiverCmd = app.add_subcommand("quiver", "quiver of the monoid algebra");
  addInput(quiverCmd);
  quiverCmd->add_option("--engine", engineName,
                        "auto, jtrivial, rtrivial, band, orthogroup, dg or "
                        "rectangular");
  quiverCmd->add_option("--prime", primeOpt, "field characteristic override");
  quiverCmd->add_option("--seed", seed, "seed for the table splitting");
  quiverCmd->add_option("--jobs", jobs, "parallel workers for pair tasks");
  quiverCmd->add_flag("--check", check,
                      "run all applicable engines and compare");

  auto* cartanCmd = app.add_subcommand("cartan", "Cartan matrix (R-trivial)");
  addInput(cartanCmd);

  auto* projCmd = app.add_subcommand("projectives",
                                     "projective indecomposables (R-trivial)");
  addInput(projCmd);

  auto* checkCmd = app.add_subcommand(
      "check", "engine vs rational-oracle arrow counts (trivial subgroups)");
  addInput(checkCmd);
  checkCmd->add_option("--prime", primeOpt, "field characteristic override");
  checkCmd->add_option("--seed", seed, "seed for the table splitting");
  checkCmd->add_option("--jobs", jobs, "parallel workers");

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      mq::MonoidTable M = mq::gen_family(famName, famArgs);
      emit(output, mq::monoid_to_json(M));
      return 0;
    }

    if (info->parsed()) {
      mq::MonoidTable M = in.load();
      mq::GreenData G = mq::green(M);
      if (format == "dot") {
        emit(output, mq::green_to_dot(M, G));
      } else {
        std::ostringstream os;
        os << "elements: " << M.n << "\n";
        os << "idempotents: " << mq::idempotents(M).size() << "\n";
        os << "R-classes: " << G.numR << "\nL-classes: " << G.numL
           << "\nJ-classes: " << G.numJ << "\n";
        int reg = 0;
        for (int m = 0; m < M.n; ++m) reg += G.regular[m];
        os << "regular elements: " << reg << "\n";
        emit(output, os.str());
      }
      return 0;
    }

    if (classifyCmd->parsed()) {
      mq::MonoidTable M = in.load();
      auto flags = mq::flag_list(mq::classify(M));
      if (format == "json") {
        std::ostringstream os;
        os << "{\n";
        for (std::size_t i = 0; i < flags.size(); ++i)
          os << "  \"" << flags[i].first << "\": "
             << (flags[i].second ? "true" : "false")
             << (i + 1 < flags.size() ? "," : "") << "\n";
        os << "}\n";
        emit(output, os.str());
      } else {
        std::ostringstream os;
        for (auto& [name, val] : flags)
          os << name << ": " << (val ? "yes" : "no") << "\n";
        emit(output, os.str());
      }
      return 0;
    }

    if (latticeCmd->parsed()) {
      mq::MonoidTable M = in.load();
      mq::GreenData G = mq::green(M);
      mq::SupportLattice L = mq::support_lattice(M, G);
      emit(output, format == "dot" ? mq::lattice_to_dot(M, L)
                                   : mq::lattice_to_json(M, L));
      return 0;
    }

    if (quiverCmd->parsed()) {
      mq::QuiverOptions opt;
      if (primeOpt) opt.prime = primeOpt;
      opt.seed = seed;
      opt.jobs = jobs;
      std::string text = slurp(in.path);
      if (mq::detect_input(text) == mq::InputKind::Category) {
        // category algebras: compute on the arrow monoid and strip the
        // two adjoined idempotent vertices
        mq::QuiverGraph Q = mq::quiver_ei(mq::category_from_json(text), opt);
        emit(output, format == "dot"    ? mq::quiver_to_dot(Q)
                     : format == "json" ? mq::quiver_to_json(Q)
                                        : mq::quiver_to_text(Q));
        return 0;
      }
      mq::Analysis A = mq::analyze(in.load());
      auto engine = mq::engine_from_name(engineName);
      if (!engine)
        throw mq::Error(mq::ErrorKind::BadInput,
                        "unknown engine '" + engineName + "'");
      mq::QuiverGraph Q = mq::quiver(A, *engine, opt);
      if (check) {
        for (mq::Engine e : mq::applicable_engines(A.flags)) {
          mq::QuiverGraph R = mq::quiver(A, e, opt);
          if (!(R == Q))
            throw mq::Error(mq::ErrorKind::Internal,
                            std::string("engine disagreement: ") +
                                mq::engine_name(e));
          std::cerr << "engine " << mq::engine_name(e) << ": agrees\n";
        }
        if (A.flags.da) {
          mq::QuiverGraph O = mq::quiver_gabriel_oracle(A);
          if (!(O == Q))
            throw mq::Error(mq::ErrorKind::Internal,
                            "oracle disagreement (radical square)");
          std::cerr << "oracle (radical square): agrees\n";
        }
      }
      emit(output, format == "dot"    ? mq::quiver_to_dot(Q)
                   : format == "json" ? mq::quiver_to_json(Q)
                                      : mq::quiver_to_text(Q));
      return 0;
    }

    if (cartanCmd->parsed()) {
      mq::MonoidTable M = in.load();
      mq::GreenData G = mq::green(M);
      mq::SupportLattice L = mq::support_lattice(M, G);
      mq::CartanMatrix C = mq::cartan(M, G, L);
      emit(output, format == "json"
                       ? mq::matrix_to_json(C.c, lattice_names(L.k))
                       : mq::matrix_to_text(C.c, lattice_names(L.k)));
      return 0;
    }

    if (projCmd->parsed()) {
      mq::MonoidTable M = in.load();
      mq::GreenData G = mq::green(M);
      mq::SupportLattice L = mq::support_lattice(M, G);
      mq::TildeLClasses T = mq::tilde_L_classes(M, G, L);
      std::ostringstream os;
      for (int X = 0; X < L.k; ++X) {
        mq::ProjModule P = mq::projective(M, G, L, T, X);
        os << "P[X" << X << "] dim " << P.basis.size() << ": {";
        for (std::size_t i = 0; i < P.basis.size(); ++i) {
          if (i) os << ",";
          os << M.label(P.basis[i]);
        }
        os << "}\n";
      }
      emit(output, os.str());
      return 0;
    }

    if (checkCmd->parsed()) {
      mq::Analysis A = mq::analyze(in.load());
      mq::QuiverOptions opt;
      if (primeOpt) opt.prime = primeOpt;
      opt.seed = seed;
      opt.jobs = jobs;
      mq::QuiverGraph Q = mq::quiver(A, mq::Engine::Auto, opt);
      mq::QuiverGraph E1 = mq::quiver_ext1_oracle(A);
      mq::QuiverGraph GO = mq::quiver_gabriel_oracle(A);
      std::ostringstream os;
      bool ok = true;
      for (std::size_t a = 0; a < Q.vertices.size(); ++a)
        for (std::size_t b = 0; b < Q.vertices.size(); ++b) {
          bool pass = Q.arrows[a][b] == E1.arrows[a][b] &&
                      Q.arrows[a][b] == GO.arrows[a][b];
          ok = ok && pass;
          os << Q.vertices[a].label << " -> " << Q.vertices[b].label
             << "  engine=" << Q.arrows[a][b]
             << " derivations=" << E1.arrows[a][b]
             << " radical=" << GO.arrows[a][b] << "  "
             << (pass ? "PASS" : "FAIL") << "\n";
        }
      emit(output, os.str());
      if (!ok)
        throw mq::Error(mq::ErrorKind::Internal, "oracle disagreement");
      return 0;
    }
  } catch (const mq::Error& e) {
    if (errorJson) {
      nlohmann::ordered_json j;
      j["error"] = mq::error_kind_name(e.kind());
      j["message"] = e.what();
      j["exit_code"] = mq::error_exit_code(e.kind());
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "error [" << mq::error_kind_name(e.kind())
                << "]: " << e.what() << "\n";
    }
    return mq::error_exit_code(e.kind());
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    if (errorJson) {
      nlohmann::ordered_json j;
      j["error"] = "Error";
      j["message"] = e.what();
      j["exit_code"] = 2;
      std::cerr << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }
  return 0;
}
