/*
   Copyright 2026 The qgalois Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "report.hpp"

#include <sstream>

namespace qg::report {

namespace {

std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

void flatten(const Json& node, const std::string& path, std::ostringstream& out) {
    if (node.is_object() && !node.empty()) {
        for (const auto& [k, v] : node.items()) flatten(v, path + "/" + escape(k), out);
    } else if (node.is_array() && !node.empty()) {
        for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], path + "/" + std::to_string(i), out);
    } else {
        out << (path.empty() ? "/" : path) << ' ' << node.dump() << '\n';
    }
}

bool type_matches(const Json& v, const std::string& type) {
    if (type == "object") return v.is_object();
    if (type == "array") return v.is_array();
    if (type == "string") return v.is_string();
    if (type == "integer") return v.is_number_integer();
    if (type == "number") return v.is_number();
    if (type == "boolean") return v.is_boolean();
    if (type == "null") return v.is_null();
    return false;
}

std::string check(const Json& v, const Json& s, const std::string& at, const Json& root) {
    if (s.contains("$ref")) {
        std::string ref = s["$ref"].get<std::string>();
        if (ref.rfind("#", 0) != 0) return at + ": unsupported $ref " + ref;
        return check(v, root.at(Json::json_pointer(ref.substr(1))), at, root);
    }
    if (s.contains("oneOf")) {
        int hits = 0;
        for (const auto& alt : s["oneOf"])
            if (check(v, alt, at, root).empty()) ++hits;
        if (hits != 1) return at + ": matches " + std::to_string(hits) + " alternatives of oneOf";
    }
    if (s.contains("type")) {
        bool ok = false;
        if (s["type"].is_array()) {
            for (const auto& t : s["type"]) ok = ok || type_matches(v, t.get<std::string>());
        } else {
            ok = type_matches(v, s["type"].get<std::string>());
        }
        if (!ok) return at + ": expected type " + s["type"].dump();
    }
    if (s.contains("enum")) {
        bool ok = false;
        for (const auto& e : s["enum"]) ok = ok || e == v;
        if (!ok) return at + ": value " + v.dump() + " not in enum";
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& k : s["required"])
                if (!v.contains(k.get<std::string>())) return at + ": missing " + k.get<std::string>();
        for (const auto& [k, child] : v.items()) {
            if (s.contains("properties") && s["properties"].contains(k)) {
                std::string e = check(child, s["properties"][k], at + "/" + k, root);
                if (!e.empty()) return e;
            } else if (s.contains("additionalProperties")) {
                const Json& ap = s["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) return at + ": unexpected key " + k;
                if (ap.is_object()) {
                    std::string e = check(child, ap, at + "/" + k, root);
                    if (!e.empty()) return e;
                }
            }
        }
    }
    if (v.is_array() && s.contains("items")) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string e = check(v[i], s["items"], at + "/" + std::to_string(i), root);
            if (!e.empty()) return e;
        }
    }
    return {};
}

}  // namespace

std::string to_lines(const Json& doc) {
    std::ostringstream out;
    flatten(doc, "", out);
    return out.str();
}

Json from_lines(const std::string& text) {
    Json doc;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto sp = line.find(' ');
        if (sp == std::string::npos) throw std::runtime_error("malformed report line: " + line);
        std::string ptr = line.substr(0, sp);
        Json value = Json::parse(line.substr(sp + 1));
        if (ptr == "/") return value;
        doc[Json::json_pointer(ptr)] = value;
    }
    return doc;
}

std::string validate(const Json& doc, const Json& schema) { return check(doc, schema, "", schema); }

}  // namespace qg::report
