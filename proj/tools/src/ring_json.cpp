// Copyright 2026 The serfact Authors
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


#include "serfact/cli/ring_json.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include "serfact/error.hpp"

namespace serfact::cli {

namespace {

// Input iterator that records how many characters the parser has consumed,
// so callbacks can be mapped back to source positions.
class CountingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator(const char* base, const char* p, std::size_t* consumed)
      : base_(base), p_(p), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    *consumed_ = static_cast<std::size_t>(p_ - base_);
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) {
    return a.p_ == b.p_;
  }
  friend bool operator!=(const CountingIterator& a, const CountingIterator& b) {
    return a.p_ != b.p_;
  }

 private:
  const char* base_;
  const char* p_;
  std::size_t* consumed_;
};

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Positions {
  std::vector<std::size_t> objects;  // offset of each '{', document order
  std::vector<std::size_t> keys;     // offset of each key's opening quote
};

class SpecReader {
 public:
  SpecReader(std::string_view text, Positions positions)
      : text_(text), pos_(std::move(positions)) {}

  RingSpec read_top(const Json& j) {
    if (!j.is_object()) fail_at(text_, first_token(), "ring spec must be a JSON object");
    return read_object(j);
  }

 private:
  std::size_t first_token() const {
    std::size_t i = 0;
    while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
    return i;
  }

  RingSpec read_spec(const Json& j, std::size_t key_pos, const char* field) {
    if (!j.is_object()) fail_at(text_, key_pos, std::string(field) + " must be a ring spec object");
    return read_object(j);
  }

  static std::optional<std::int64_t> as_int(const Json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    return std::nullopt;
  }

  RingSpec read_object(const Json& j) {
    const std::size_t at = obj_ < pos_.objects.size() ? pos_.objects[obj_] : 0;
    ++obj_;
    std::optional<std::string> type;
    std::optional<std::int64_t> n;
    std::optional<std::int64_t> size;
    std::optional<RingSpec> base;
    std::optional<std::vector<RingSpec>> factors;
    std::optional<std::vector<Elem>> gens;
    std::size_t type_pos = at;
    std::size_t n_pos = at;
    std::size_t size_pos = at;

    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::size_t kp = key_ < pos_.keys.size() ? pos_.keys[key_] : at;
      ++key_;
      const std::string& key = it.key();
      const Json& v = it.value();
      if (key == "type") {
        if (!v.is_string()) fail_at(text_, kp, "\"type\" must be a string");
        type = v.get<std::string>();
        type_pos = kp;
      } else if (key == "n") {
        n = as_int(v);
        if (!n) fail_at(text_, kp, "\"n\" must be an integer");
        n_pos = kp;
      } else if (key == "size") {
        size = as_int(v);
        if (!size) fail_at(text_, kp, "\"size\" must be an integer");
        size_pos = kp;
      } else if (key == "base") {
        base = read_spec(v, kp, "\"base\"");
      } else if (key == "factors") {
        if (!v.is_array()) fail_at(text_, kp, "\"factors\" must be an array");
        factors.emplace();
        for (const Json& f : v) factors->push_back(read_spec(f, kp, "each factor"));
      } else if (key == "ideal_generators") {
        if (!v.is_array()) fail_at(text_, kp, "\"ideal_generators\" must be an array");
        gens.emplace();
        for (const Json& g : v) {
          const auto x = as_int(g);
          if (!x || *x < 0 || *x > std::int64_t{0xffffffff}) {
            fail_at(text_, kp, "ideal generators must be element indices");
          }
          gens->push_back(static_cast<Elem>(*x));
        }
      } else {
        fail_at(text_, kp, "unknown key \"" + key + "\"");
      }
    }

    if (!type) fail_at(text_, at, "missing \"type\"");
    auto require = [&](bool present, const char* field) {
      if (!present) fail_at(text_, at, "\"" + *type + "\" spec is missing \"" + field + "\"");
    };
    auto forbid = [&](bool present, const char* field) {
      if (present) fail_at(text_, at, "\"" + *type + "\" spec does not take \"" + field + "\"");
    };

    if (*type == "zmod") {
      require(n.has_value(), "n");
      forbid(size.has_value(), "size");
      forbid(base.has_value(), "base");
      forbid(factors.has_value(), "factors");
      forbid(gens.has_value(), "ideal_generators");
      if (*n < 2) fail_at(text_, n_pos, "\"n\" must be at least 2");
      return RingSpec::zmod(*n);
    }
    if (*type == "matrix" || *type == "triangular") {
      require(size.has_value(), "size");
      require(base.has_value(), "base");
      forbid(n.has_value(), "n");
      forbid(factors.has_value(), "factors");
      forbid(gens.has_value(), "ideal_generators");
      if (*size < 1) fail_at(text_, size_pos, "\"size\" must be at least 1");
      const auto k = static_cast<std::size_t>(*size);
      return *type == "matrix" ? RingSpec::matrix(k, std::move(*base))
                               : RingSpec::triangular(k, std::move(*base));
    }
    if (*type == "product") {
      require(factors.has_value(), "factors");
      forbid(n.has_value(), "n");
      forbid(size.has_value(), "size");
      forbid(base.has_value(), "base");
      forbid(gens.has_value(), "ideal_generators");
      if (factors->empty()) fail_at(text_, at, "\"factors\" must be nonempty");
      return RingSpec::product(std::move(*factors));
    }
    if (*type == "quotient") {
      require(base.has_value(), "base");
      require(gens.has_value(), "ideal_generators");
      forbid(n.has_value(), "n");
      forbid(size.has_value(), "size");
      forbid(factors.has_value(), "factors");
      return RingSpec::quotient(std::move(*base), std::move(*gens));
    }
    fail_at(text_, type_pos, "unknown ring type \"" + *type + "\"");
  }

  std::string_view text_;
  Positions pos_;
  std::size_t obj_ = 0;
  std::size_t key_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  std::size_t consumed = 0;
  Positions positions;
  const char* base = text.data();
  CountingIterator first(base, base, &consumed);
  CountingIterator last(base, base + text.size(), &consumed);
  Json::parser_callback_t callback = [&](int, Json::parse_event_t event, Json& parsed) {
    if (event == Json::parse_event_t::object_start) {
      positions.objects.push_back(consumed == 0 ? 0 : consumed - 1);
    } else if (event == Json::parse_event_t::key) {
      const std::size_t len = parsed.get<std::string>().size() + 2;
      positions.keys.push_back(consumed >= len ? consumed - len : 0);
    }
    return true;
  };
  Json j;
  try {
    j = Json::parse(first, last, callback);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    fail_at(text, offset, cut == std::string::npos ? what : what.substr(cut));
  }
  return SpecReader(text, std::move(positions)).read_top(j);
}

RingSpec load_ring_spec(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return parse_ring_spec(arg);
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read ring spec file " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ring_spec(buf.str());
}

Json spec_to_json(const RingSpec& spec) {
  Json j;
  switch (spec.kind()) {
    case RingSpec::Kind::ZMod:
      j["type"] = "zmod";
      j["n"] = spec.modulus();
      break;
    case RingSpec::Kind::Matrix:
    case RingSpec::Kind::Triangular:
      j["type"] = spec.kind() == RingSpec::Kind::Matrix ? "matrix" : "triangular";
      j["size"] = spec.size();
      j["base"] = spec_to_json(spec.base());
      break;
    case RingSpec::Kind::Product:
      j["type"] = "product";
      j["factors"] = Json::array();
      for (const RingSpec& f : spec.factors()) j["factors"].push_back(spec_to_json(f));
      break;
    case RingSpec::Kind::Quotient:
      j["type"] = "quotient";
      j["base"] = spec_to_json(spec.base());
      j["ideal_generators"] = spec.ideal_generators();
      break;
  }
  return j;
}

std::vector<Elem> parse_element_list(std::string_view csv) {
  std::vector<Elem> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t end = csv.find(',', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view item = csv.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) {
      if (end == csv.size() && out.empty() && start == 0) break;
      throw Error(ErrorCode::ParseError, "empty entry in element list \"" + std::string(csv) + "\"");
    }
    Elem x = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(ErrorCode::ParseError, "bad element index \"" + std::string(item) + "\"");
    }
    out.push_back(x);
    start = end + 1;
  }
  return out;
}

std::vector<std::vector<Elem>> parse_generator_lists(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("factor lists: ") + e.what());
  }
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "factor lists must be a JSON array");
  std::vector<std::vector<Elem>> out;
  for (const Json& list : j) {
    if (!list.is_array()) throw Error(ErrorCode::ParseError, "each factor must be an array");
    auto& gens = out.emplace_back();
    for (const Json& g : list) {
      if (!g.is_number_unsigned() || g.get<std::uint64_t>() > 0xffffffffULL) {
        throw Error(ErrorCode::ParseError, "factor generators must be element indices");
      }
      gens.push_back(static_cast<Elem>(g.get<std::uint64_t>()));
    }
  }
  return out;
}

std::vector<Elem> small_generating_set(const RightIdeal& ideal) {
  for (std::size_t k = 0;; ++k) {
    if (auto gens = generation_number_at_most(ideal, k)) return *gens;
  }
}

Json ideal_to_json(const RightIdeal& ideal) {
  Json j;
  j["size"] = ideal.size();
  j["generators"] = small_generating_set(ideal);
  j["two_sided"] = is_two_sided(ideal);
  return j;
}

}  // namespace serfact::cli
