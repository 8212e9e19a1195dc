// Copyright (c) 2026 chi4 contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace chi4cli {

// Floats are rendered with %.17g so that rereading recovers the exact bits
// and identical runs produce identical bytes.
std::string json_double(double v);
std::string json_string(const std::string& s);
std::string json_uint(unsigned long long v);
std::string json_int(long long v);
std::string json_bool(bool v);

// RFC 4180 quoting, applied only when the field needs it.
std::string csv_field(const std::string& s);

}  // namespace chi4cli
