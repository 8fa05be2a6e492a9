/*
 * Copyright (c) 2026, the stabilab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "stabilab/report.hh"

#include <cstdio>

namespace stabilab {

std::string format_fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

ReportDoc::ReportDoc() : buf_("stabilab report\n") {}

void ReportDoc::begin_section(const std::string& name) {
  buf_ += '\n';
  buf_ += '[';
  buf_ += name;
  buf_ += "]\n";
}

void ReportDoc::kv(const std::string& key, const std::string& value) {
  buf_ += key;
  buf_ += " = ";
  buf_ += value;
  buf_ += '\n';
}

void ReportDoc::kv(const std::string& key, const char* value) {
  kv(key, std::string(value));
}

void ReportDoc::kv(const std::string& key, bool value) {
  kv(key, value ? "true" : "false");
}

void ReportDoc::kv(const std::string& key, std::uint64_t value) {
  kv(key, std::to_string(value));
}

void ReportDoc::kv(const std::string& key, std::uint32_t value) {
  kv(key, std::to_string(value));
}

void ReportDoc::kv(const std::string& key, double value) {
  kv(key, format_fixed(value));
}

}  // namespace stabilab
