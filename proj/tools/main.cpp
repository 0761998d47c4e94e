// Command-line surface: batch subcommands over the fusion ring, pair
// classification and the theorem verifier, with JSON and DOT emission.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "pathfusion/serialize.hpp"

namespace {

using namespace pathfusion;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_input = 2;
constexpr int exit_invalid_pair = 3;
constexpr int exit_resources = 4;

std::vector<PathWord> parse_generators(Signature sig, const std::vector<std::string>& texts) {
  std::vector<PathWord> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(PathWord::parse(sig, t));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << content;
}

void emit(const std::string& text) { std::cout << text << "\n"; }

void emit_words(const std::vector<PathWord>& words) {
  std::string out;
  for (const auto& w : words) {
    out += w.str();
    out += '\n';
  }
  std::cout << out;
}

std::string cayley_dot(Signature sig, int radius, const PairSpec* pair) {
  const auto ball = enumerate_group_ball(sig, radius);
  std::string out = "digraph cayley {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (const auto& g : ball) {
    out += "  \"" + g.str() + "\"";
    std::string attrs;
    if (g.empty()) attrs += "shape=doublecircle";
    if (pair != nullptr && pair->member_s(g)) {
      if (!attrs.empty()) attrs += ", ";
      attrs += "style=filled, fillcolor=lightblue";
    }
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  for (const auto& g : ball) {
    for (int j = 1; j <= sig.rank(); ++j) {
      const GroupWord h = multiply(g, GroupWord(sig, {Letter(j, 1)}));
      if (h.size() > static_cast<std::size_t>(radius)) continue;
      out += "  \"" + g.str() + "\" -> \"" + h.str() + "\" [label=\"a" + std::to_string(j) +
             "\"];\n";
    }
  }
  out += "}\n";
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"fusion rings of free products of free unitary quantum groups, "
               "computed on Cayley-graph path words"};
  app.require_subcommand(1);
  std::function<int()> action;

  // fuse
  {
    auto* cmd = app.add_subcommand("fuse", "tensor product of two irreducibles");
    auto rank = std::make_shared<int>(0);
    auto json = std::make_shared<bool>(false);
    auto words = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--rank", *rank, "number of free factors")->required();
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->add_option("words", *words, "two words in the a<j>/A<j> grammar")
        ->expected(2)
        ->required();
    cmd->callback([=, &action] {
      action = [=] {
        const Signature sig(*rank);
        const FusionTerms terms =
            tensor(PathWord::parse(sig, (*words)[0]), PathWord::parse(sig, (*words)[1]));
        if (*json) {
          emit(to_json(terms).dump(2));
        } else {
          std::string out;
          for (const auto& [word, mult] : terms) {
            out += word.str();
            if (mult > 1) out += " x" + std::to_string(mult);
            out += '\n';
          }
          std::cout << out;
        }
        return exit_ok;
      };
    });
  }

  // closure
  {
    auto* cmd = app.add_subcommand("closure", "subobject-and-conjugation closure of generators");
    auto rank = std::make_shared<int>(0);
    auto cutoff = std::make_shared<int>(0);
    auto cap = std::make_shared<std::size_t>(default_closure_cap);
    auto json = std::make_shared<bool>(false);
    auto gens = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--rank", *rank, "number of free factors")->required();
    cmd->add_option("--cutoff", *cutoff, "discard tensor terms longer than this")->required();
    cmd->add_option("--gen", *gens, "generator word (repeatable)");
    cmd->add_option("--max-set-size", *cap, "hard cap on the closure size");
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->callback([=, &action] {
      action = [=] {
        const Signature sig(*rank);
        const ClosureResult result = closure(sig, parse_generators(sig, *gens), *cutoff, *cap);
        if (*json) {
          nlohmann::json j = {{"cutoff", *cutoff},
                              {"size", result.set.size()},
                              {"saturated", result.saturated},
                              {"words", to_json(result.set)["words"]}};
          emit(j.dump(2));
        } else {
          emit_words(result.set.words());
        }
        return exit_ok;
      };
    });
  }

  // classify
  {
    auto* cmd = app.add_subcommand("classify", "extract the classifying pair of generators");
    auto rank = std::make_shared<int>(0);
    auto json = std::make_shared<bool>(false);
    auto gens = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--rank", *rank, "number of free factors")->required();
    cmd->add_option("--gen", *gens, "generator word (repeatable)");
    cmd->add_flag("--json", *json, "emit JSON (default)");
    cmd->callback([=, &action] {
      action = [=] {
        const Signature sig(*rank);
        const PairSpec pair = extract_pair(sig, parse_generators(sig, *gens));
        emit(pair_to_json(pair).dump(2));
        return exit_ok;
      };
    });
  }

  // realize
  {
    auto* cmd = app.add_subcommand("realize", "irreducibles of a pair up to a radius");
    auto pair_file = std::make_shared<std::string>();
    auto radius = std::make_shared<int>(0);
    auto json = std::make_shared<bool>(false);
    auto augment = std::make_shared<bool>(false);
    cmd->add_option("--pair", *pair_file, "pair JSON file")->required();
    cmd->add_option("--radius", *radius, "word-length truncation")->required();
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->add_flag("--augment-unit", *augment, "add the identity to the transversal");
    cmd->callback([=, &action] {
      action = [=] {
        const PairSpec pair = load_pair_file(*pair_file, *augment);
        const IrrSet set = realize(pair, *radius);
        if (*json)
          emit(to_json(set).dump(2));
        else
          emit_words(set.words());
        return exit_ok;
      };
    });
  }

  // check-pair
  {
    auto* cmd = app.add_subcommand("check-pair", "validate the three pair conditions");
    auto pair_file = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    auto augment = std::make_shared<bool>(false);
    cmd->add_option("--pair", *pair_file, "pair JSON file")->required();
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->add_flag("--augment-unit", *augment, "add the identity to the transversal");
    cmd->callback([=, &action] {
      action = [=] {
        const PairSpec pair = load_pair_file(*pair_file, *augment);
        const ValidationResult v = pair.validation();
        if (*json) {
          emit(to_json(v).dump(2));
        } else {
          const auto word = [](bool b) { return b ? "true" : "false"; };
          std::string out;
          out += std::string("contains_gamma: ") + word(v.contains_gamma) + "\n";
          out += std::string("invariant: ") + word(v.invariant) + "\n";
          out += std::string("connected: ") + word(v.connected) + "\n";
          std::cout << out;
        }
        return v.valid() ? exit_ok : exit_invalid_pair;
      };
    });
  }

  // verify
  {
    auto* cmd = app.add_subcommand("verify", "two-sided theorem check on one instance");
    auto rank = std::make_shared<int>(0);
    auto cutoff = std::make_shared<int>(0);
    auto radius = std::make_shared<int>(0);
    auto cap = std::make_shared<std::size_t>(default_closure_cap);
    auto json = std::make_shared<bool>(false);
    auto gens = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--rank", *rank, "number of free factors")->required();
    cmd->add_option("--cutoff", *cutoff, "closure truncation")->required();
    cmd->add_option("--radius", *radius, "comparison radius")->required();
    cmd->add_option("--gen", *gens, "generator word (repeatable)");
    cmd->add_option("--max-set-size", *cap, "hard cap on the closure size");
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->callback([=, &action] {
      action = [=] {
        const Signature sig(*rank);
        const VerificationReport rep =
            verify_theorem(sig, parse_generators(sig, *gens), *cutoff, *radius, *cap);
        if (*json) {
          emit(to_json(rep).dump(2));
        } else {
          std::string out;
          out += "agreement_radius: " + std::to_string(rep.agreement_radius) + " / " +
                 std::to_string(rep.radius) + "\n";
          out += "closure: size=" + std::to_string(rep.closure_size) +
                 " saturated=" + (rep.closure_saturated ? "true" : "false") + "\n";
          out += "realized: size=" + std::to_string(rep.realized_size) + "\n";
          out += "witnesses: " + std::to_string(rep.witnesses.size()) + "\n";
          out += "relation1: " +
                 std::to_string(rep.steps.relation1_checked - rep.steps.relation1_failed) + "/" +
                 std::to_string(rep.steps.relation1_checked) + "\n";
          out += "relation2: " +
                 std::to_string(rep.steps.relation2_checked - rep.steps.relation2_failed) + "/" +
                 std::to_string(rep.steps.relation2_checked) + "\n";
          out += "final_chain: " +
                 std::to_string(rep.steps.chain_checked - rep.steps.chain_failed) + "/" +
                 std::to_string(rep.steps.chain_checked) + "\n";
          out += std::string("pair_stable: ") + (rep.pair_stable ? "true" : "false") + "\n";
          out += std::string("result: ") + (rep.passed() ? "PASS" : "FAIL") + "\n";
          std::cout << out;
        }
        return rep.passed() ? exit_ok : exit_failed;
      };
    });
  }

  // stallings
  {
    auto* cmd = app.add_subcommand("stallings", "folded core automaton of a subgroup");
    auto rank = std::make_shared<int>(0);
    auto gens = std::make_shared<std::vector<std::string>>();
    auto pair_file = std::make_shared<std::string>();
    auto dot_path = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    auto rank_opt = cmd->add_option("--rank", *rank, "number of free factors");
    auto gen_opt = cmd->add_option("--gen", *gens, "subgroup generator (repeatable)");
    auto pair_opt = cmd->add_option("--pair", *pair_file, "take the subgroup from a pair file");
    cmd->add_option("--dot", *dot_path, "write Graphviz output to this path");
    cmd->add_flag("--json", *json, "emit JSON summary");
    pair_opt->excludes(gen_opt);
    pair_opt->excludes(rank_opt);
    gen_opt->needs(rank_opt);
    cmd->callback([=, &action] {
      action = [=] {
        StallingsGraph graph = [&] {
          if (!pair_file->empty()) return load_pair_file(*pair_file).gamma();
          if (*rank < 1) throw ParseError("stallings: pass --rank with --gen, or --pair");
          const Signature sig(*rank);
          std::vector<GroupWord> generators;
          generators.reserve(gens->size());
          for (const auto& t : *gens) generators.push_back(GroupWord::parse(sig, t));
          return StallingsGraph::build(sig, generators);
        }();
        if (!dot_path->empty()) write_file(*dot_path, graph.to_dot());
        if (*json) {
          emit(nlohmann::json{{"vertices", graph.vertex_count()}, {"edges", graph.edge_count()}}
                   .dump(2));
        } else {
          emit("vertices: " + std::to_string(graph.vertex_count()) +
               "\nedges: " + std::to_string(graph.edge_count()));
        }
        return exit_ok;
      };
    });
  }

  // cayley
  {
    auto* cmd = app.add_subcommand("cayley", "Cayley ball as DOT, with S-membership highlighting");
    auto rank = std::make_shared<int>(0);
    auto radius = std::make_shared<int>(0);
    auto pair_file = std::make_shared<std::string>();
    auto dot_path = std::make_shared<std::string>();
    auto rank_opt = cmd->add_option("--rank", *rank, "number of free factors");
    cmd->add_option("--radius", *radius, "ball radius")->required();
    auto pair_opt = cmd->add_option("--pair", *pair_file, "highlight S = Gamma*T of this pair");
    cmd->add_option("--dot", *dot_path, "write to this path instead of stdout");
    pair_opt->excludes(rank_opt);
    cmd->callback([=, &action] {
      action = [=] {
        std::string dot;
        if (!pair_file->empty()) {
          const PairSpec pair = load_pair_file(*pair_file);
          dot = cayley_dot(pair.sig(), *radius, &pair);
        } else {
          if (*rank < 1) throw ParseError("cayley: pass --rank or --pair");
          dot = cayley_dot(Signature(*rank), *radius, nullptr);
        }
        if (!dot_path->empty())
          write_file(*dot_path, dot);
        else
          std::cout << dot;
        return exit_ok;
      };
    });
  }

  // properties
  {
    auto* cmd = app.add_subcommand("properties", "algebraic property suite of the fusion ring");
    auto rank = std::make_shared<int>(0);
    auto radius = std::make_shared<int>(4);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto json = std::make_shared<bool>(false);
    cmd->add_option("--rank", *rank, "number of free factors")->required();
    cmd->add_option("--radius", *radius, "ball radius driving the checks");
    cmd->add_option("--seed", *seed, "sampling seed");
    cmd->add_flag("--json", *json, "emit JSON");
    cmd->callback([=, &action] {
      action = [=] {
        const PropertyReport rep = run_property_suite(Signature(*rank), *radius, *seed);
        if (*json) {
          emit(to_json(rep).dump(2));
        } else {
          std::string out;
          for (const auto& c : rep.checks) {
            out += c.name + ": cases=" + std::to_string(c.cases) +
                   " failures=" + std::to_string(c.failures);
            if (!c.passed()) out += " first=" + c.first_counterexample;
            out += '\n';
          }
          out += std::string("result: ") + (rep.passed() ? "PASS" : "FAIL") + "\n";
          std::cout << out;
        }
        return rep.passed() ? exit_ok : exit_failed;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    return action();
  } catch (const InvalidPairError& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto word = [](bool b) { return b ? "true" : "false"; };
    std::cout << "contains_gamma: " << word(e.result.contains_gamma) << "\n"
              << "invariant: " << word(e.result.invariant) << "\n"
              << "connected: " << word(e.result.connected) << "\n";
    return exit_invalid_pair;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resources;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const SignatureMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_failed;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
