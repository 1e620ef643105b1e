// Copyright 2026 The Authors.
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

// Text formats. All are line-oriented with '#' comments and blank lines
// ignored.
//
//   matroid v1                  setsystem v1            interp v1
//   elements a b c d            elements a b c          X1 = a b
//   rank 2                      family A1: a b          X2 =
//   bases                       family A2: b c          x1 = c
//   a b
//   a c
//   ...
//
// A matroid body is one of
//   bases        one basis per line; '-' stands for the empty basis
//   ranktable    '<hex mask>: <rank>' for every subset
//   kinser <r> [relax <s> [<t>]]
// Subset masks use the declaration order of the elements line, bit i for
// the i-th element.

#ifndef MLOGIC_IO_H_
#define MLOGIC_IO_H_

#include <iosfwd>
#include <optional>
#include <string>

#include "mlogic/kinser.h"
#include "mlogic/matroid.h"
#include "mlogic/msol/ast.h"
#include "mlogic/msol/evaluator.h"
#include "mlogic/msol/parser.h"
#include "mlogic/transversal.h"
#include "mlogic/validate.h"

namespace mlogic {

struct LoadOptions {
  bool validate = true;
  ValidationOptions validation;
};

struct MatroidFile {
  Matroid matroid;
  // Set for a kinser body.
  std::optional<KinserMatroid> kinser;
};

// Format errors throw ParseError (with line and column); a body that is
// not a matroid throws ValidationError.
MatroidFile read_matroid(std::istream& in, const LoadOptions& options = {});
MatroidFile load_matroid(const std::string& path, const LoadOptions& options = {});

enum class MatroidBody { kAuto, kBases, kRankTable };

// kAuto writes bases for at most kMaxBasesElements elements and refuses
// larger matroids; a ranktable must be asked for.
inline constexpr std::size_t kMaxBasesElements = 16;
void write_matroid(std::ostream& out, const Matroid& m,
                   MatroidBody body = MatroidBody::kAuto);
void write_kinser(std::ostream& out, const KinserDescriptor& d);
// Kinser descriptor if present, else as write_matroid.
void write_matroid(std::ostream& out, const MatroidFile& f,
                   MatroidBody body = MatroidBody::kAuto);

SetSystem read_set_system(std::istream& in);
SetSystem load_set_system(const std::string& path);
void write_set_system(std::ostream& out, const SetSystem& s);

// Element names are resolved against the ground set.
msol::Interpretation read_interpretation(std::istream& in, const GroundSet& g);
msol::Interpretation load_interpretation(const std::string& path,
                                         const GroundSet& g);
void write_interpretation(std::ostream& out, const msol::Interpretation& i,
                          const GroundSet& g);

msol::FormulaPtr load_sentence(const std::string& path,
                               const msol::ParseOptions& options = {});

// Reads a whole file; throws Error naming the path if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace mlogic

#endif  // MLOGIC_IO_H_
