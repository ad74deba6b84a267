#include "fairagg/instance_io.hpp"

#include <fstream>
#include <sstream>

namespace fairagg {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream stream(line);
    std::vector<std::string> tokens;
    std::string token;
    while (stream >> token) tokens.push_back(token);
    return tokens;
}

long parse_int_token(const std::string& token, const char* what) {
    try {
        std::size_t used = 0;
        const long value = std::stol(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw invalid_input(std::string("bad ") + what + ": " + token);
    }
}

std::vector<std::string> labeled_tokens(const std::string& line, const std::string& label) {
    std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty() || tokens.front() != label + ":")
        throw invalid_input("expected a '" + label + ":' line");
    tokens.erase(tokens.begin());
    return tokens;
}

} // namespace

Ranking parse_ranking_line(const std::string& line) {
    const std::vector<std::string> tokens = tokens_of(line);
    if (tokens.empty()) throw invalid_input("empty ranking line");
    std::vector<int> order;
    order.reserve(tokens.size());
    for (const std::string& token : tokens)
        order.push_back(static_cast<int>(parse_int_token(token, "candidate id")));
    return Ranking(std::move(order));
}

std::string format_ranking(const Ranking& pi) {
    std::string out;
    for (int i = 1; i <= pi.size(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(pi.at(i));
    }
    return out;
}

Instance parse_instance_text(const std::string& text) {
    const std::vector<std::string> lines = content_lines(text);
    if (lines.size() < 5) throw invalid_input("instance file truncated");

    const std::vector<std::string> header = tokens_of(lines[0]);
    if (header.size() != 4) throw invalid_input("header must read: d n g k");
    const long d = parse_int_token(header[0], "candidate count");
    const long n = parse_int_token(header[1], "ranking count");
    const long g = parse_int_token(header[2], "group count");
    const long k = parse_int_token(header[3], "prefix length");
    if (d < 1 || n < 1 || g < 1 || k < 1)
        throw invalid_input("header values must be positive");
    if (lines.size() != 4 + static_cast<std::size_t>(n))
        throw invalid_input("expected " + std::to_string(n) + " ranking lines, found " +
                            std::to_string(lines.size() - 4));

    const std::vector<std::string> group_tokens = labeled_tokens(lines[1], "groups");
    if (group_tokens.size() != static_cast<std::size_t>(d))
        throw invalid_input("groups line must list one group per candidate");
    std::vector<int> group_of;
    group_of.reserve(group_tokens.size());
    for (const std::string& token : group_tokens)
        group_of.push_back(static_cast<int>(parse_int_token(token, "group id")));
    GroupedUniverse universe(static_cast<int>(d), static_cast<int>(g), std::move(group_of));

    const std::vector<std::string> alpha_tokens = labeled_tokens(lines[2], "alpha");
    const std::vector<std::string> beta_tokens = labeled_tokens(lines[3], "beta");
    if (alpha_tokens.size() != static_cast<std::size_t>(g) ||
        beta_tokens.size() != static_cast<std::size_t>(g))
        throw invalid_input("alpha/beta lines must list one bound per group");
    std::vector<Rational> alphas, betas;
    for (const std::string& token : alpha_tokens) alphas.push_back(parse_rational(token));
    for (const std::string& token : beta_tokens) betas.push_back(parse_rational(token));
    FairnessSpec spec(std::move(alphas), std::move(betas), static_cast<int>(k));

    std::vector<Ranking> rankings;
    rankings.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        Ranking pi = parse_ranking_line(lines[static_cast<std::size_t>(4 + i)]);
        if (pi.size() != d)
            throw invalid_input("ranking " + std::to_string(i + 1) + " has " +
                                std::to_string(pi.size()) + " entries, expected " +
                                std::to_string(d));
        rankings.push_back(std::move(pi));
    }
    return Instance(std::move(universe), std::move(spec), std::move(rankings));
}

std::string serialize_instance(const Instance& inst) {
    std::string out;
    out += std::to_string(inst.candidate_count());
    out += ' ';
    out += std::to_string(inst.ranking_count());
    out += ' ';
    out += std::to_string(inst.universe.group_count());
    out += ' ';
    out += std::to_string(inst.spec.prefix_length());
    out += '\n';

    out += "groups:";
    for (int c = 1; c <= inst.candidate_count(); ++c) {
        out += ' ';
        out += std::to_string(inst.universe.group_of(c));
    }
    out += '\n';

    out += "alpha:";
    for (int i = 1; i <= inst.universe.group_count(); ++i) {
        out += ' ';
        out += format_rational(inst.spec.alpha(i));
    }
    out += '\n';

    out += "beta:";
    for (int i = 1; i <= inst.universe.group_count(); ++i) {
        out += ' ';
        out += format_rational(inst.spec.beta(i));
    }
    out += '\n';

    for (const Ranking& pi : inst.rankings) {
        out += format_ranking(pi);
        out += '\n';
    }
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::ios_base::failure("cannot read " + path);
    return buffer.str();
}

} // namespace

Instance load_instance(const std::string& path) {
    return parse_instance_text(read_file(path));
}

void save_instance(const Instance& inst, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open " + path + " for writing");
    out << serialize_instance(inst);
    out.flush();
    if (!out) throw std::ios_base::failure("cannot write " + path);
}

Ranking load_single_ranking(const std::string& path) {
    const std::vector<std::string> lines = content_lines(read_file(path));
    if (lines.size() != 1)
        throw invalid_input(path + ": expected exactly one ranking line");
    return parse_ranking_line(lines.front());
}

} // namespace fairagg
