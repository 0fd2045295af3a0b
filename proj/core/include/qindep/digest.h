// Copyright 2026 The qindep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QINDEP_DIGEST_H
#define QINDEP_DIGEST_H

#include <string>
#include <string_view>

namespace qindep {

/// "sha256:" followed by the lowercase hex SHA-256 of the bytes.
std::string content_digest(std::string_view bytes);

}  // namespace qindep

#endif
