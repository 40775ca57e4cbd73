/*
 * Copyright 2026 The roughring Authors.
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

#include "roughring/element_set.hpp"

#include <cctype>
#include <charconv>

namespace roughring {

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Element e) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    });
    out += '}';
    return out;
}

ElementSet ElementSet::parse(std::string_view text, std::size_t universe_size) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += c;

    auto fail = [&](const std::string& why) {
        throw Error(ErrorKind::ParseError, "bad set literal '" + std::string(text) + "': " + why);
    };
    if (compact.size() < 2 || compact.front() != '{' || compact.back() != '}')
        fail("expected {e1,e2,...}");

    ElementSet out(universe_size);
    std::string_view body(compact);
    body = body.substr(1, body.size() - 2);
    if (body.empty()) return out;

    while (true) {
        auto comma = body.find(',');
        std::string_view tok = body.substr(0, comma);
        unsigned long long value = 0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
            fail("'" + std::string(tok) + "' is not a nonnegative integer");
        out.insert(static_cast<Element>(value));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return out;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return (a.bits() & (diff & (~diff + 1))) != 0;
}

} // namespace roughring
