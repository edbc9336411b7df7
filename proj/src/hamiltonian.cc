// Copyright 2026 The qdb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <fstream>
#include <sstream>

#include "qdb/bench.h"

namespace qdb {

bool PauliTerm::is_identity() const {
  return word.find_first_not_of('I') == std::string::npos;
}

double HamiltonianSpec::identity_offset() const {
  double c = 0.0;
  for (const PauliTerm& t : terms) {
    if (t.is_identity()) c += t.coefficient;
  }
  return c;
}

void HamiltonianSpec::validate() const {
  if (num_qubits == 0) throw ValidationError("hamiltonian has no qubits");
  if (terms.empty()) throw ValidationError("hamiltonian has no terms");
  for (const PauliTerm& t : terms) {
    if (!std::isfinite(t.coefficient)) {
      throw ValidationError("non-finite coefficient for " + t.word);
    }
    if (t.word.size() != num_qubits ||
        t.word.find_first_not_of("IXYZ") != std::string::npos) {
      throw ValidationError("bad pauli word '" + t.word + "'");
    }
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

HamiltonianSpec parse_hamiltonian(const std::string& text) {
  HamiltonianSpec h;
  bool have_header = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (!have_header) {
      const std::string key = "qubits:";
      if (line.compare(0, key.size(), key) != 0) {
        throw ParseError(line_no, "expected 'qubits: <n>', got '" + line + "'");
      }
      const std::string num = trim(line.substr(key.size()));
      std::size_t used = 0;
      long n = 0;
      try {
        n = std::stol(num, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != num.size() || n <= 0) {
        throw ParseError(line_no, "bad qubit count '" + num + "'");
      }
      h.num_qubits = static_cast<std::size_t>(n);
      have_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string coef_tok, word, extra;
    fields >> coef_tok >> word;
    if (word.empty()) {
      throw ParseError(line_no, "expected '<coefficient> <pauli-word>', got '" +
                                    line + "'");
    }
    if (fields >> extra) {
      throw ParseError(line_no, "unexpected token '" + extra + "'");
    }
    double coef = 0.0;
    std::size_t used = 0;
    try {
      coef = std::stod(coef_tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != coef_tok.size() || !std::isfinite(coef)) {
      throw ParseError(line_no, "bad coefficient '" + coef_tok + "'");
    }
    if (word.size() != h.num_qubits) {
      throw ParseError(line_no, "pauli word '" + word + "' has length " +
                                    std::to_string(word.size()) + ", expected " +
                                    std::to_string(h.num_qubits));
    }
    const auto bad = word.find_first_not_of("IXYZ");
    if (bad != std::string::npos) {
      throw ParseError(line_no, "bad pauli letter '" + word.substr(bad, 1) +
                                    "' in '" + word + "'");
    }
    h.terms.push_back({coef, word});
  }
  if (!have_header) throw ParseError(line_no, "missing 'qubits:' header");
  if (h.terms.empty()) throw ParseError(line_no, "no terms");
  return h;
}

HamiltonianSpec load_hamiltonian(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open hamiltonian file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_hamiltonian(ss.str());
}

std::string default_hamiltonian_path() {
  return std::string(QDB_DATA_DIR) + "/h2_sto3g_0735.ham";
}

Block pauli_exp_circuit(const std::string& word, double theta,
                        const Qubits& qs, const PauliOptions& opts) {
  if (word.size() != qs.size()) {
    throw ArgumentError("pauli word length does not match qubits");
  }
  Block out("pauli_exp(" + word + ")");
  Qubits active;
  Block basis("basis");
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'I':
        continue;
      case 'X':
        basis.h(qs[i]);
        break;
      case 'Y':
        if (!opts.y_as_x) basis.sdg(qs[i]);
        basis.h(qs[i]);
        break;
      case 'Z':
        break;
      default:
        throw ArgumentError("bad pauli letter in '" + word + "'");
    }
    active.push_back(qs[i]);
  }
  if (active.empty()) return out;  // global phase only
  Block compute("ladder");
  compute.append(basis);
  for (std::size_t i = 0; i + 1 < active.size(); ++i) {
    compute.cnot(active[i], active[i + 1]);
  }
  Block action("rz");
  action.rz(active.back(), 2.0 * theta);
  out.compute_uncompute(std::move(compute), std::move(action));
  return out;
}

Block trotter_circuit(const HamiltonianSpec& h, double t, int r,
                      const Qubits& qs, const PauliOptions& opts) {
  if (r < 1) throw ArgumentError("trotter steps must be >= 1");
  Block step("trotter_step");
  const double dt = t / r;
  for (const PauliTerm& term : h.terms) {
    if (term.is_identity()) continue;
    step.call(pauli_exp_circuit(term.word, term.coefficient * dt, qs, opts));
  }
  BlockPtr shared = share(std::move(step));
  Block out("trotter");
  for (int i = 0; i < r; ++i) out.call(shared);
  return out;
}

}  // namespace qdb
