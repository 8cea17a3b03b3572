#include "efg/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace efg {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_array() && j.size() == 2) {
        const auto d = j[1].get<std::int64_t>();
        if (d == 0) throw std::invalid_argument("zero denominator in rational");
        return Rational(j[0].get<std::int64_t>(), d);
    }
    throw std::invalid_argument("expected a rational, got " + j.dump());
}

Signal signal_from_json(const json& j) {
    if (!j.is_object() || !j.contains("predicates") || !j["predicates"].is_object())
        throw std::invalid_argument("signal JSON must have an object field \"predicates\"");
    Signal::Predicates preds;
    for (const auto& [name, arr] : j["predicates"].items()) {
        if (name.empty() || !(name[0] >= 'A' && name[0] <= 'Z'))
            throw std::invalid_argument("predicate names must start with an uppercase letter: '" + name + "'");
        auto& ivs = preds[name];
        if (!arr.is_array()) throw std::invalid_argument("predicate '" + name + "' must map to an array");
        for (const auto& e : arr) {
            if (!e.is_array() || (e.size() != 4 && e.size() != 6))
                throw std::invalid_argument("interval must be [lo_num, lo_den, hi_num, hi_den]: " + e.dump());
            const auto ld = e[1].get<std::int64_t>();
            const auto hd = e[3].get<std::int64_t>();
            if (ld == 0 || hd == 0) throw std::invalid_argument("zero denominator in interval " + e.dump());
            Interval iv{Rational(e[0].get<std::int64_t>(), ld), Rational(e[2].get<std::int64_t>(), hd)};
            if (e.size() == 6) {
                iv.lo_closed = e[4].get<bool>();
                iv.hi_closed = e[5].get<bool>();
            }
            ivs.push_back(iv);
        }
    }
    return Signal(std::move(preds));
}

json signal_to_json(const Signal& s) {
    json preds = json::object();
    for (const auto& [name, ivs] : s.predicates()) {
        json arr = json::array();
        for (const auto& iv : ivs) {
            json e = {iv.lo.num(), iv.lo.den(), iv.hi.num(), iv.hi.den()};
            if (!iv.half_open()) {
                e.push_back(iv.lo_closed);
                e.push_back(iv.hi_closed);
            }
            arr.push_back(std::move(e));
        }
        preds[name] = std::move(arr);
    }
    return json{{"predicates", std::move(preds)}};
}

json load_json_argument(const std::string& text) {
    std::error_code ec;
    if (!text.empty() && text.front() != '{' && text.front() != '[' && std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        std::stringstream ss;
        ss << in.rdbuf();
        return json::parse(ss.str());
    }
    return json::parse(text);
}

}  // namespace efg
