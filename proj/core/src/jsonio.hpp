#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "aras/errors.hpp"

namespace aras::io {

using nlohmann::json;

// Strict object reader: every accessed key is marked, finish() rejects the
// rest. All type errors become ValidationError with the document path.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) throw ValidationError(path_.empty() ? "$" : path_, "expected an object");
    }

    const std::string& path() const { return path_; }

    std::string item_path(const std::string& key) const {
        return path_.empty() ? key : path_ + "." + key;
    }

    bool has(const char* key) const { return j_.contains(key); }

    const json& require(const char* key) {
        seen_.insert(key);
        if (!j_.contains(key)) throw ValidationError(item_path(key), "missing required key");
        return j_[key];
    }

    const json* optional(const char* key) {
        seen_.insert(key);
        if (!j_.contains(key)) return nullptr;
        return &j_[key];
    }

    std::string get_string(const char* key) { return as_string(require(key), item_path(key)); }

    std::string get_string_or(const char* key, std::string def) {
        const json* v = optional(key);
        return v ? as_string(*v, item_path(key)) : std::move(def);
    }

    std::uint64_t get_u64(const char* key) { return as_u64(require(key), item_path(key)); }

    std::uint64_t get_u64_or(const char* key, std::uint64_t def) {
        const json* v = optional(key);
        return v ? as_u64(*v, item_path(key)) : def;
    }

    double get_double(const char* key) { return as_double(require(key), item_path(key)); }

    double get_double_or(const char* key, double def) {
        const json* v = optional(key);
        return v ? as_double(*v, item_path(key)) : def;
    }

    bool get_bool_or(const char* key, bool def) {
        const json* v = optional(key);
        if (!v) return def;
        if (!v->is_boolean()) throw ValidationError(item_path(key), "expected a boolean");
        return v->get<bool>();
    }

    const json& get_array(const char* key) {
        const json& v = require(key);
        if (!v.is_array()) throw ValidationError(item_path(key), "expected an array");
        return v;
    }

    const json* get_array_opt(const char* key) {
        const json* v = optional(key);
        if (v && !v->is_array()) throw ValidationError(item_path(key), "expected an array");
        return v;
    }

    const json* get_object_opt(const char* key) {
        const json* v = optional(key);
        if (v && !v->is_object()) throw ValidationError(item_path(key), "expected an object");
        return v;
    }

    void finish() const {
        for (const auto& item : j_.items())
            if (!seen_.count(item.key())) throw ValidationError(item_path(item.key()), "unknown key");
    }

    static std::string as_string(const json& v, const std::string& at) {
        if (!v.is_string()) throw ValidationError(at, "expected a string");
        return v.get<std::string>();
    }

    static std::uint64_t as_u64(const json& v, const std::string& at) {
        if (v.is_number_unsigned()) return v.get<std::uint64_t>();
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
            return static_cast<std::uint64_t>(v.get<std::int64_t>());
        throw ValidationError(at, "expected a non-negative integer");
    }

    static double as_double(const json& v, const std::string& at) {
        if (!v.is_number()) throw ValidationError(at, "expected a number");
        return v.get<double>();
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> seen_;
};

inline json parse_document(std::string_view bytes) {
    try {
        return json::parse(bytes);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
}

}  // namespace aras::io
