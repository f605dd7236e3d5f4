// Copyright 2026 The Polyrep Authors.
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

#ifndef POLYREP_PORTER_STEMMER_H_
#define POLYREP_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace polyrep {

// The original Porter (1980) suffix-stripping algorithm, steps 1a to 5b.
//
// Words of one or two characters are returned unchanged, as are words that
// contain anything other than ASCII 'a'-'z'.
std::string PorterStem(std::string_view word);

}  // namespace polyrep

#endif  // POLYREP_PORTER_STEMMER_H_
