#include "firefighter/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace firefighter {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
std::vector<T> parse_numbers(const std::string& text, std::size_t line_no) {
    std::istringstream ss(text);
    std::vector<T> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) {
            throw ParseError(line_no, "expected an integer, got '" + tok + "'");
        }
        out.push_back(static_cast<T>(value));
    }
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open '" + path + "'");
    }
    return in;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

InstanceBundle parse_instance(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::vector<std::int64_t>> header;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            std::istringstream ss(line.substr(1));
            std::string word;
            Vertex v = 0;
            if (ss >> word && word == "role" && ss >> v) {
                std::string label;
                std::getline(ss, label);
                roles.push_back({v, trim(label)});
            }
            continue;
        }
        auto nums = parse_numbers<std::int64_t>(line, line_no);
        if (!header) {
            if (nums.size() != 4 && nums.size() != 5) {
                throw ParseError(line_no, "header must be 'n m s k [K]'");
            }
            if (nums[0] < 0 || nums[1] < 0) {
                throw ParseError(line_no, "n and m must be non-negative");
            }
            header = nums;
            header_line = line_no;
            continue;
        }
        if (nums.size() != 2) {
            throw ParseError(line_no, "edge line must hold exactly two vertex ids");
        }
        edges.emplace_back(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    }
    if (!header) {
        throw ParseError(line_no, "missing header line");
    }
    const auto& h = *header;
    if (static_cast<std::int64_t>(edges.size()) != h[1]) {
        throw ParseError(line_no, "header announces " + std::to_string(h[1]) + " edges, found " +
                                      std::to_string(edges.size()));
    }
    InstanceBundle inst;
    try {
        inst.graph = Graph::build(static_cast<std::int32_t>(h[0]), edges);
    } catch (const InvalidInput& e) {
        throw ParseError(header_line, e.what());
    }
    inst.source = static_cast<Vertex>(h[2]);
    if (!inst.graph.contains(inst.source)) {
        throw ParseError(header_line, "source vertex " + std::to_string(h[2]) + " out of range");
    }
    inst.k = h[3];
    if (h.size() == 5) {
        inst.target = h[4];
    }
    inst.roles = std::move(roles);
    return inst;
}

InstanceBundle read_instance_file(const std::string& path) {
    auto in = open_input(path);
    return parse_instance(in);
}

void write_instance(std::ostream& out, const InstanceBundle& inst) {
    for (const auto& role : inst.roles) {
        out << "# role " << role.vertex << ' ' << role.label << '\n';
    }
    out << inst.graph.vertex_count() << ' ' << inst.graph.edge_count() << ' ' << inst.source << ' ' << inst.k;
    if (inst.target) {
        out << ' ' << *inst.target;
    }
    out << '\n';
    for (auto [u, v] : inst.graph.edges()) {
        out << u << ' ' << v << '\n';
    }
}

void write_instance_file(const std::string& path, const InstanceBundle& inst) {
    std::ofstream out(path);
    if (!out) {
        throw InvalidInput("cannot write '" + path + "'");
    }
    write_instance(out, inst);
}

AnyStrategy parse_strategy(std::istream& in) {
    std::string raw;
    std::size_t line_no = 0;
    int variant = 0;
    std::vector<std::vector<Vertex>> rounds;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (variant == 0) {
            if (line == "variant 1") {
                variant = 1;
            } else if (line == "variant 2") {
                variant = 2;
            } else {
                throw ParseError(line_no, "expected 'variant 1' or 'variant 2'");
            }
            continue;
        }
        if (line == "-") {
            rounds.emplace_back();
            continue;
        }
        auto ids = parse_numbers<Vertex>(line, line_no);
        if (variant == 1 && ids.size() != 1) {
            throw ParseError(line_no, "variant 1 rounds protect a single vertex or '-'");
        }
        rounds.push_back(std::move(ids));
    }
    if (variant == 0) {
        throw ParseError(line_no, "missing variant header");
    }
    if (variant == 2) {
        return StrategyII{std::move(rounds)};
    }
    StrategyI s;
    for (const auto& r : rounds) {
        s.moves.push_back(r.empty() ? std::nullopt : std::optional<Vertex>(r.front()));
    }
    return s;
}

AnyStrategy read_strategy_file(const std::string& path) {
    auto in = open_input(path);
    return parse_strategy(in);
}

void write_strategy(std::ostream& out, const StrategyI& s) {
    out << "variant 1\n";
    for (const auto& m : s.moves) {
        if (m) {
            out << *m << '\n';
        } else {
            out << "-\n";
        }
    }
}

void write_strategy(std::ostream& out, const StrategyII& s) {
    out << "variant 2\n";
    for (const auto& r : s.rounds) {
        if (r.empty()) {
            out << "-\n";
            continue;
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            out << (i ? " " : "") << r[i];
        }
        out << '\n';
    }
}

}  // namespace firefighter
