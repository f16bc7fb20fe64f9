// Copyright 2026 The irgraph Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// irgraph: command-line front end.
//
// Exit codes: 0 success, 1 verifier violations, 2 unreadable input or bad
// usage, 3 transformation or execution failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "irgraph/constfold.hpp"
#include "irgraph/error.hpp"
#include "irgraph/generator.hpp"
#include "irgraph/interpreter.hpp"
#include "irgraph/isel.hpp"
#include "irgraph/serialize.hpp"
#include "irgraph/stats.hpp"
#include "irgraph/verifier.hpp"

namespace {

using namespace irgraph;

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kBadInput = 2;
constexpr int kTransformFailed = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string readInput(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), {}};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void writeOutput(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

bool traceFromEnv() {
  const char* v = std::getenv("IRGRAPH_TRACE");
  return v != nullptr && std::string(v) == "1";
}

// Unusable input (parse, schema, spec, missing arguments) is exit 2; anything
// raised while transforming or executing is exit 3.
template <class Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kParse:
      case ErrorCode::kSchema:
      case ErrorCode::kUnknownKind:
      case ErrorCode::kUnknownRelation:
      case ErrorCode::kSpec:
      case ErrorCode::kMissingArgument:
        return kBadInput;
      default:
        return kTransformFailed;
    }
  }
}

IrGraph load(const std::string& path) {
  const std::string text = readInput(path);
  try {
    return loadGraph(text);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

int report(const std::vector<Violation>& violations) {
  if (violations.empty()) {
    std::cout << "valid\n";
    return kOk;
  }
  for (const Violation& v : violations) std::cout << formatViolation(v) << '\n';
  return kInvalid;
}

std::vector<std::int32_t> parseArgs(const std::string& list) {
  std::vector<std::int32_t> values;
  if (list.empty()) return values;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("bad argument value '" + item + "'");
    }
    if (used != item.size() || v < INT32_MIN || v > INT32_MAX) {
      throw InputError("bad argument value '" + item + "'");
    }
    values.push_back(static_cast<std::int32_t>(v));
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Program graph optimizer"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  bool strict = false;
  bool trace = false;
  std::size_t maxIterations = kDefaultIterationCap;
  std::vector<std::string> disabled;
  GenSpec gen;
  std::string condMode = "mixed";
  std::string argList;

  auto* verifyCmd = app.add_subcommand("verify", "Check structural validity");
  verifyCmd->add_option("input", input, "Graph file or -")->required();
  verifyCmd->add_flag("--strict", strict, "Also check branch labels");

  auto* foldCmd = app.add_subcommand("fold", "Constant folding to a fixpoint");
  foldCmd->add_option("input", input, "Graph file or -")->required();
  foldCmd->add_option("-o,--output", output, "Output file or -")->required();
  foldCmd->add_flag("--trace", trace, "Per-sweep reports on stderr");
  foldCmd->add_option("--max-iterations", maxIterations, "Sweep cap")
      ->check(CLI::PositiveNumber);
  foldCmd->add_option("--disable", disabled, "Pass names to skip");

  auto* iselCmd = app.add_subcommand("isel", "Instruction selection");
  iselCmd->add_option("input", input, "Graph file or -")->required();
  iselCmd->add_option("-o,--output", output, "Output file or -")->required();
  iselCmd->add_flag("--trace", trace, "Per-pass reports on stderr");

  auto* pipeCmd = app.add_subcommand("pipeline", "fold, isel, then verify");
  pipeCmd->add_option("input", input, "Graph file or -")->required();
  pipeCmd->add_option("-o,--output", output, "Output file or -")->required();
  pipeCmd->add_flag("--trace", trace, "Per-pass reports on stderr");

  auto* genCmd = app.add_subcommand("gen", "Generate a random valid graph");
  genCmd->add_option("--seed", gen.seed)->required();
  genCmd->add_option("--ops", gen.opCount)->required();
  genCmd->add_option("--consts", gen.constRatio, "Const operand ratio");
  genCmd->add_option("--args", gen.argCount);
  genCmd->add_option("--diamonds", gen.diamonds);
  genCmd->add_option("--mem", gen.memOps);
  genCmd->add_option("--cond", condMode, "mixed, const or computed")
      ->check(CLI::IsMember({"mixed", "const", "computed"}));
  genCmd->add_option("-o,--output", output, "Output file or -")->required();

  auto* runCmd = app.add_subcommand("interpret", "Evaluate the graph");
  runCmd->add_option("input", input, "Graph file or -")->required();
  runCmd->add_option("--args", argList, "Comma-separated int32 values");

  auto* statsCmd = app.add_subcommand("stats", "Print graph statistics");
  statsCmd->add_option("input", input, "Graph file or -")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }
  trace = trace || traceFromEnv();

  return guarded([&]() -> int {
    if (*verifyCmd) return report(verify(load(input), strict));

    if (*foldCmd) {
      FoldConfig config;
      config.trace = trace;
      config.iterationCap = maxIterations;
      for (const std::string& name : disabled) {
        auto pass = parseFoldPass(name);
        if (!pass) throw InputError("unknown pass '" + name + "'");
        config.enabled.erase(*pass);
      }
      IrGraph g = load(input);
      runConstantFolding(g, config);
      writeOutput(output, saveGraph(g));
      return kOk;
    }

    if (*iselCmd) {
      IrGraph g = load(input);
      runInstructionSelection(g, SelectConfig{trace});
      writeOutput(output, saveGraph(g));
      return kOk;
    }

    if (*pipeCmd) {
      IrGraph g = load(input);
      FoldConfig config;
      config.trace = trace;
      runConstantFolding(g, config);
      runInstructionSelection(g, SelectConfig{trace});
      writeOutput(output, saveGraph(g));
      const auto violations = verify(g);
      for (const Violation& v : violations) {
        std::cerr << formatViolation(v) << '\n';
      }
      return violations.empty() ? kOk : kInvalid;
    }

    if (*genCmd) {
      gen.conditions = *parseCondMode(condMode);
      writeOutput(output, saveGraph(generateGraph(gen)));
      return kOk;
    }

    if (*runCmd) {
      const IrGraph g = load(input);
      std::cout << interpret(g, parseArgs(argList)) << '\n';
      return kOk;
    }

    if (*statsCmd) {
      std::cout << formatStats(computeStats(load(input)));
      return kOk;
    }
    return kBadInput;
  });
}
