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

// Command-line frontend.

#ifndef QDB_CLI_H_
#define QDB_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace qdb {

// `args` excludes the program name. Returns 0 when the run completed and all
// assertions passed, 2 when at least one failed, 1 on usage or config errors.
// QDB_FORMAT (json or table) sets the default --format.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace qdb

#endif  // QDB_CLI_H_
