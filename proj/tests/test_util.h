// Copyright 2026 The qcss Authors
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

#ifndef QCSS_TESTS_TEST_UTIL_H_
#define QCSS_TESTS_TEST_UTIL_H_

#include <gtest/gtest.h>

#include "qcss/error.h"

#define EXPECT_ERRC(statement, errc)                                           \
    do {                                                                       \
        try {                                                                  \
            statement;                                                         \
            ADD_FAILURE() << "expected " << qcss::to_string(errc);             \
        } catch (const qcss::Error &e) {                                       \
            EXPECT_EQ(e.code(), errc) << e.what();                             \
        }                                                                      \
    } while (0)

#endif  // QCSS_TESTS_TEST_UTIL_H_
