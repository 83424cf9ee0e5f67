// Copyright 2026 The Cagelift Authors
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

#ifndef CAGELIFT_TESTS_SUPPORT_ERROR_MATCHERS_H_
#define CAGELIFT_TESTS_SUPPORT_ERROR_MATCHERS_H_

#include <string>

#include "cagelift/error.h"
#include "gtest/gtest.h"

namespace cagelift::testing {

// Succeeds when `fn()` throws cagelift::Error with the given code.
template <typename Fn>
::testing::AssertionResult ThrowsCode(Fn&& fn, ErrorCode code) {
  try {
    fn();
  } catch (const Error& e) {
    if (e.code() == code) return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure()
           << "threw " << ErrorCodeName(e.code()) << " (" << e.what()
           << "), expected " << ErrorCodeName(code);
  }
  return ::testing::AssertionFailure()
         << "did not throw, expected " << ErrorCodeName(code);
}

}  // namespace cagelift::testing

#define EXPECT_CAGELIFT_ERROR(statement, code) \
  EXPECT_TRUE(::cagelift::testing::ThrowsCode([&] { statement; }, code))

#endif  // CAGELIFT_TESTS_SUPPORT_ERROR_MATCHERS_H_
