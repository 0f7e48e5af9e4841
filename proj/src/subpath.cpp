#include "respec/subpath.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace respec {

namespace {

bool starts_with(std::span<const Address> seq, std::span<const Address> head) {
    return seq.size() >= head.size() &&
           std::equal(head.begin(), head.end(), seq.begin());
}

}  // namespace

SubPathMatcher SubPathMatcher::compile(std::vector<SubPathSpec> specs) {
    if (specs.size() > kMaxSubPaths)
        throw ConfigError("at most 8 sub-path specs supported");
    std::set<std::uint8_t> ids;
    for (const auto& s : specs) {
        if (s.id < 1 || s.id > kMaxSubPathId)
            throw ConfigError("sub-path id must be 1..8");
        if (!ids.insert(s.id).second)
            throw ConfigError("duplicate sub-path id " + std::to_string(s.id));
        if (s.pattern.size() < 2)
            throw ConfigError("sub-path pattern must have length >= 2");
    }
    for (std::size_t i = 0; i < specs.size(); ++i) {
        for (std::size_t j = 0; j < specs.size(); ++j) {
            if (i == j) continue;
            if (starts_with(specs[j].pattern, specs[i].pattern))
                throw ConfigError("sub-path " + std::to_string(specs[i].id) +
                                  " is a prefix of sub-path " +
                                  std::to_string(specs[j].id));
        }
    }
    SubPathMatcher m;
    m.specs_ = std::move(specs);
    return m;
}

int SubPathMatcher::complete_match(std::span<const Address> buf) const {
    for (std::size_t i = 0; i < specs_.size(); ++i)
        if (starts_with(buf, specs_[i].pattern)) return static_cast<int>(i);
    return -1;
}

bool SubPathMatcher::is_proper_prefix_of_pattern(
    std::span<const Address> buf) const {
    for (const auto& s : specs_)
        if (buf.size() < s.pattern.size() &&
            starts_with(s.pattern, buf))
            return true;
    return false;
}

void SubPathMatcher::Session::drain(bool final, std::vector<Token>& out) {
    while (!pending_.empty()) {
        const std::span<const Address> buf(pending_);
        if (const int hit = matcher_->complete_match(buf); hit >= 0) {
            const auto& spec = matcher_->specs()[hit];
            out.push_back(Token::make_subpath(spec.id));
            pending_.erase(pending_.begin(),
                           pending_.begin() +
                               static_cast<std::ptrdiff_t>(spec.pattern.size()));
            continue;
        }
        if (!final && matcher_->is_proper_prefix_of_pattern(buf)) break;
        out.push_back(Token::make_addr(pending_.front()));
        pending_.erase(pending_.begin());
    }
}

std::vector<Token> SubPathMatcher::Session::push(Address dest) {
    pending_.push_back(dest);
    std::vector<Token> out;
    drain(false, out);
    return out;
}

std::vector<Token> SubPathMatcher::Session::finish() {
    std::vector<Token> out;
    drain(true, out);
    return out;
}

std::vector<Token> subpath_encode(const SubPathMatcher& matcher,
                                  std::span<const Address> addresses) {
    auto session = matcher.session();
    std::vector<Token> out;
    for (Address a : addresses) {
        auto emitted = session.push(a);
        out.insert(out.end(), emitted.begin(), emitted.end());
    }
    auto tail = session.finish();
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

std::vector<Token> subpath_decode(const std::vector<SubPathSpec>& specs,
                                  std::span<const Token> tokens) {
    std::vector<Token> out;
    for (const Token& t : tokens) {
        switch (t.kind) {
            case Token::Kind::Addr:
                out.push_back(t);
                break;
            case Token::Kind::SubPath: {
                const auto it = std::find_if(
                    specs.begin(), specs.end(),
                    [&](const SubPathSpec& s) { return s.id == t.subpath_id; });
                if (it == specs.end())
                    throw DecodeError("unknown sub-path id " +
                                      std::to_string(t.subpath_id));
                for (Address a : it->pattern) out.push_back(Token::make_addr(a));
                break;
            }
            case Token::Kind::PrefixMark:
                throw DecodeError("prefix marker reached the sub-path stage");
        }
    }
    return out;
}

std::vector<SubPathSpec> parse_subpaths(const std::string& text) {
    std::vector<SubPathSpec> specs;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream fields(raw);
        std::string head;
        if (!(fields >> head)) continue;
        if (head != "subpath")
            throw ParseError("malformed sub-path line " + std::to_string(lineno));
        SubPathSpec s;
        unsigned id = 0;
        if (!(fields >> id) || id < 1 || id > kMaxSubPathId)
            throw ParseError("bad sub-path id on line " + std::to_string(lineno));
        s.id = static_cast<std::uint8_t>(id);
        std::string addr;
        while (fields >> addr) s.pattern.push_back(parse_address(addr));
        if (s.pattern.size() < 2)
            throw ParseError("sub-path pattern too short on line " +
                             std::to_string(lineno));
        specs.push_back(std::move(s));
    }
    return specs;
}

std::string write_subpaths(const std::vector<SubPathSpec>& specs) {
    std::string out;
    for (const auto& s : specs) {
        out += "subpath " + std::to_string(s.id);
        for (Address a : s.pattern) out += " " + format_address(a);
        out += "\n";
    }
    return out;
}

}  // namespace respec
