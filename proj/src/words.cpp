#include "gbc/words.hpp"

#include <sstream>

namespace gbc {

GroupWord inverse(const GroupWord& w) {
    GroupWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
    return out;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

GroupWord free_reduce_word(const GroupWord& w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

GroupWord parse_word(const std::string& text) {
    GroupWord out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 'A'))
            throw MalformedInput("bad word token: " + tok);
        for (std::size_t i = 1; i < tok.size(); ++i)
            if (tok[i] < '0' || tok[i] > '9')
                throw MalformedInput("bad word token: " + tok);
        int gen = std::stoi(tok.substr(1));
        out.push_back({gen, tok[0] == 'a' ? +1 : -1});
    }
    return out;
}

std::string format_word(const GroupWord& w) {
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += (l.sign > 0 ? 'a' : 'A');
        out += std::to_string(l.gen);
    }
    return out;
}

}  // namespace gbc
