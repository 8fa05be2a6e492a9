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

#ifndef STABILAB_REPORT_HH_
#define STABILAB_REPORT_HH_

#include <cstdint>
#include <string>

namespace stabilab {

/// Renders a double with fixed precision; reports must be byte-stable.
std::string format_fixed(double value);

/// A plain-text report: named sections of key-value lines. Rendering is a
/// pure function of the calls made, so identical runs produce identical
/// bytes (no timestamps, no addresses, no locale).
class ReportDoc {
 public:
  ReportDoc();

  void begin_section(const std::string& name);

  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, const char* value);
  void kv(const std::string& key, bool value);
  void kv(const std::string& key, std::uint64_t value);
  void kv(const std::string& key, std::uint32_t value);
  void kv(const std::string& key, double value);

  const std::string& str() const { return buf_; }

 private:
  std::string buf_;
};

}  // namespace stabilab

#endif  // STABILAB_REPORT_HH_
