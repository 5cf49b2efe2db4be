#include "locres/problem.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace locres {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t next = s.find(sep, pos);
        std::string part =
            trimmed(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (!part.empty()) out.push_back(part);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
    return true;
}

}  // namespace

ProblemFile read_problem(const std::string& text) {
    ProblemFile pf;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trimmed(line);
        if (line.empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected 'key: value'");
        std::string key = trimmed(line.substr(0, colon));
        std::string value = trimmed(line.substr(colon + 1));
        if (!seen.insert(key).second)
            throw InputError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        if (key == "vars") {
            pf.vars = split_list(value, ',');
        } else if (key == "params") {
            pf.params = split_list(value, ',');
        } else if (key == "weights") {
            for (const auto& p : split_list(value, ',')) {
                try {
                    std::size_t used = 0;
                    long w = std::stol(p, &used);
                    if (used != p.size()) throw std::invalid_argument(p);
                    pf.weights.push_back(w);
                } catch (const std::exception&) {
                    throw InputError("line " + std::to_string(lineno) + ": bad weight '" + p + "'");
                }
            }
        } else if (key == "order") {
            pf.order = value;
        } else if (key == "F") {
            pf.f_src = split_list(value, ';');
        } else if (key == "h") {
            pf.h_src = value;
        } else if (key == "hseries") {
            pf.hseries_src = value;
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    std::set<std::string> names;
    for (const auto& v : pf.vars) {
        if (!valid_name(v)) throw InputError("bad variable name '" + v + "'");
        if (!names.insert(v).second) throw InputError("duplicate name '" + v + "'");
    }
    for (const auto& p : pf.params) {
        if (!valid_name(p)) throw InputError("bad parameter name '" + p + "'");
        if (!names.insert(p).second) throw InputError("duplicate name '" + p + "'");
    }
    return pf;
}

ProblemFile read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_problem(ss.str());
}

}  // namespace locres
