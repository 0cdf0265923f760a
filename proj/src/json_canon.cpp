#include "kmpp/json_canon.hpp"

#include <cmath>
#include <cstdio>

namespace kmpp {

namespace {

void dump_value(const nlohmann::ordered_json& v, std::string& out) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (v.type()) {
        case value_t::null:
            out += "null";
            break;
        case value_t::boolean:
            out += v.get<bool>() ? "true" : "false";
            break;
        case value_t::number_integer: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%lld",
                          static_cast<long long>(v.get<std::int64_t>()));
            out += buf;
            break;
        }
        case value_t::number_unsigned: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%llu",
                          static_cast<unsigned long long>(v.get<std::uint64_t>()));
            out += buf;
            break;
        }
        case value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                out += "null";
            } else if (d == 0.0) {
                out += '0';  // canonicalizes -0.0 as well
            } else {
                char buf[40];
                std::snprintf(buf, sizeof(buf), "%.17g", d);
                out += buf;
            }
            break;
        }
        case value_t::string:
            out += nlohmann::json(v.get<std::string>()).dump();
            break;
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& item : v) {
                if (!first) out += ',';
                first = false;
                dump_value(item, out);
            }
            out += ']';
            break;
        }
        case value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) out += ',';
                first = false;
                out += nlohmann::json(it.key()).dump();
                out += ':';
                dump_value(it.value(), out);
            }
            out += '}';
            break;
        }
        default:
            out += "null";
            break;
    }
}

}  // namespace

std::string dump_canonical(const nlohmann::ordered_json& value) {
    std::string out;
    dump_value(value, out);
    out += '\n';
    return out;
}

}  // namespace kmpp
