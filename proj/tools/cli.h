// Copyright 2026 The secdom Authors
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

// The secdom command-line front end, as a library so tests can drive it.

#ifndef SECDOM_TOOLS_CLI_H_
#define SECDOM_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "secdom/families.h"
#include "secdom/graph.h"
#include "secdom/solve_exact.h"
#include "secdom/verify.h"

namespace secdom::cli {

enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kAbsent = 2,
  kBudget = 3,
};

enum class OutputFormat { kText, kStructured, kDot };

// `args` excludes the program name. Graph input comes from `in` unless
// --input or --graph is given.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

// Renderings shared by the subcommands; exposed for golden tests.
std::string FormatSolution(const Graph& g, const Solution& sol,
                           OutputFormat format);
std::string FormatDecision(const Graph& g, Variant variant, int k,
                           const DecisionResult& result, OutputFormat format);
std::string FormatReport(const Graph& g, const VertexSet& s,
                         const CertificateReport& report, OutputFormat format);
std::string FormatClosedForm(const FamilySpec& spec,
                             const ClosedFormResult& result,
                             OutputFormat format);

}  // namespace secdom::cli

#endif  // SECDOM_TOOLS_CLI_H_
