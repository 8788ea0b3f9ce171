#include "isokit/cli.hpp"

#include "isokit/abbv.hpp"
#include "isokit/bordism.hpp"
#include "isokit/chern.hpp"
#include "isokit/json_io.hpp"
#include "isokit/kclass.hpp"
#include "isokit/realization.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

namespace isokit::cli {
namespace {

using json_io::Json;
namespace fs = std::filesystem;

enum class Format { json, table };

Format parse_format(const std::string& s, const char* source)
{
    if (s == "json") return Format::json;
    if (s == "table") return Format::table;
    throw DataError(std::string(source) + ": unknown format '" + s + "' (expected json or table)");
}

/// Right-aligned text columns separated by two spaces.
class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    void print(std::ostream& os) const
    {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        for (const auto& row : rows_) {
            std::string line;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) line += "  ";
                line += std::string(width[c] - row[c].size(), ' ') + row[c];
            }
            os << line << "\n";
        }
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string str(const Integer& v) { return v.get_str(); }

std::string slurp(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool is_inline_json(const std::string& input)
{
    const auto first = input.find_first_not_of(" \t\r\n");
    return first != std::string::npos && (input[first] == '{' || input[first] == '[');
}

Json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw DataError(origin + ": invalid JSON: " + e.what());
    }
}

Json read_input(const std::string& input, std::istream& in)
{
    if (is_inline_json(input)) return parse_text(input, "input");
    if (input == "-") return parse_text(slurp(in), "stdin");
    std::ifstream file(input);
    if (!file) throw DataError("input: cannot open '" + input + "'");
    return parse_text(slurp(file), input);
}

void print_multiplicities(const MultiplicityTable& t, std::ostream& out)
{
    TextTable table({"j", "m_plus", "m_minus", "m"});
    for (unsigned j = 0; j <= t.n; ++j) {
        table.add({std::to_string(j), str(t.m_plus[j]), str(t.m_minus[j]), str(t.m[j])});
    }
    table.print(out);
}

void print_defects(const NotRealizable& nr, std::ostream& out)
{
    out << "not realizable: m_j != C(n,j) m_0 at j =";
    for (unsigned j : nr.violated()) out << " " << j;
    out << "\n";
    TextTable table({"j", "residual"});
    for (unsigned j = 0; j < nr.residuals.size(); ++j) table.add({std::to_string(j), str(nr.residuals[j])});
    table.print(out);
}

int emit_check(const IsotropyData& d, Format fmt, std::ostream& out)
{
    const auto report = check_identities(d);
    const auto mult = multiplicities(d);
    if (fmt == Format::json) {
        Json obj = json_io::to_json(report);
        obj["multiplicities"] = json_io::to_json(mult);
        out << obj.dump() << "\n";
    } else {
        out << "n = " << d.n() << ", points = " << d.point_count() << "\n";
        print_multiplicities(mult, out);
        out << "\n";
        TextTable table({"i", "I_i"});
        for (std::size_t i = 0; i < report.residuals.size(); ++i) {
            table.add({std::to_string(i), str(report.residuals[i])});
        }
        table.print(out);
        out << (report.satisfied ? "ABBV identities hold" : "ABBV identities fail") << "\n";
    }
    return report.satisfied ? kOk : kNotRealizable;
}

int check_directory(const fs::path& dir, Format fmt, std::ostream& out)
{
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());

    int code = kOk;
    Json results = Json::array();
    TextTable table({"file", "result"});
    for (const auto& file : files) {
        const std::string name = file.filename().string();
        try {
            std::ifstream in(file);
            const auto d = json_io::data_from_json(parse_text(slurp(in), name));
            const bool ok = check_identities(d).satisfied;
            results.push_back(Json{{"file", name}, {"satisfied", ok}});
            table.add({name, ok ? "holds" : "fails"});
            if (!ok && code == kOk) code = kNotRealizable;
        } catch (const DataError& e) {
            results.push_back(Json{{"error", e.what()}, {"file", name}});
            table.add({name, std::string("error: ") + e.what()});
            code = kMalformed;
        }
    }
    if (fmt == Format::json) {
        out << Json{{"results", std::move(results)}}.dump() << "\n";
    } else {
        table.print(out);
    }
    return code;
}

int emit_realize(const IsotropyData& d, Format fmt, std::ostream& out)
{
    const auto r = realize(d);
    if (fmt == Format::json) {
        out << json_io::to_json(r).dump() << "\n";
    } else if (const auto* w = std::get_if<Witness>(&r)) {
        out << "realizable: " << abs(w->m0) << " x " << (w->m0 < 0 ? "-" : "") << "(S^2)^" << w->n
            << " plus representation spheres\n";
        TextTable table({"j", "S(V_j + R) copies"});
        for (unsigned j = 0; j < w->rep_spheres.size(); ++j) {
            table.add({std::to_string(j), str(w->rep_spheres[j])});
        }
        table.print(out);
    } else {
        print_defects(std::get<NotRealizable>(r), out);
    }
    return std::holds_alternative<Witness>(r) ? kOk : kNotRealizable;
}

int emit_bordism(const Json& input, Format fmt, std::ostream& out)
{
    if (input.is_array()) {
        std::vector<IsotropyData> components;
        for (std::size_t idx = 0; idx < input.size(); ++idx) {
            try {
                components.push_back(json_io::data_from_json(input[idx]));
            } catch (const DataError& e) {
                throw DataError("[" + std::to_string(idx) + "]." + e.what());
            }
        }
        const auto r = graded_bordism_class(components);
        if (const auto* p = std::get_if<BordismPolynomial>(&r)) {
            if (fmt == Format::json) {
                out << json_io::to_json(*p).dump() << "\n";
            } else {
                out << *p << "\n";
            }
            return kOk;
        }
        const auto& failure = std::get<ComponentNotRealizable>(r);
        if (fmt == Format::json) {
            Json obj = json_io::to_json(failure.defect);
            obj["component"] = failure.index;
            out << obj.dump() << "\n";
        } else {
            out << "component " << failure.index << ": ";
            print_defects(failure.defect, out);
        }
        return kNotRealizable;
    }

    const auto d = json_io::data_from_json(input);
    const auto r = bordism_class(d);
    if (const auto* p = std::get_if<BordismPolynomial>(&r)) {
        if (fmt == Format::json) {
            out << json_io::to_json(*p).dump() << "\n";
        } else {
            out << *p << "\n";
        }
        return kOk;
    }
    if (fmt == Format::json) {
        out << json_io::to_json(std::get<NotRealizable>(r)).dump() << "\n";
    } else {
        print_defects(std::get<NotRealizable>(r), out);
    }
    return kNotRealizable;
}

MultiIndex parse_multi_index(const std::string& spec)
{
    std::vector<unsigned> entries;
    if (spec.empty()) return MultiIndex{};
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw DataError("--chern: '" + spec + "' is not a comma-separated list of positive integers");
        }
        entries.push_back(static_cast<unsigned>(std::stoul(item)));
    }
    try {
        return MultiIndex(std::move(entries));
    } catch (const DataError& e) {
        throw DataError(std::string("--chern: ") + e.what());
    }
}

int emit_identities(const IsotropyData& d, std::optional<unsigned> max_degree,
                    const std::vector<std::string>& chern, Format fmt, std::ostream& out)
{
    const unsigned top = max_degree.value_or(d.n());
    std::vector<MultiIndex> indices;
    for (const auto& spec : chern) indices.push_back(parse_multi_index(spec));

    if (fmt == Format::json) {
        Json rows = Json::array();
        for (unsigned i = 0; i <= top; ++i) {
            rows.push_back(Json{{"i", i}, {"value", json_io::to_json(identity_I(d, i))}});
        }
        Json obj{{"identities", std::move(rows)}, {"n", d.n()}};
        if (!indices.empty()) {
            Json loc = Json::array();
            for (const auto& I : indices) {
                const auto v = localization_value(d, I);
                loc.push_back(Json{{"coeff", json_io::to_json(v.coefficient())},
                                   {"index", I.entries()},
                                   {"u_exponent", v.exponent()}});
            }
            obj["localization"] = std::move(loc);
        }
        out << obj.dump() << "\n";
        return kOk;
    }

    TextTable table({"i", "I_i"});
    for (unsigned i = 0; i <= top; ++i) table.add({std::to_string(i), str(identity_I(d, i))});
    table.print(out);
    if (!indices.empty()) {
        out << "\n";
        TextTable loc({"I", "coefficient", "u exponent"});
        for (const auto& I : indices) {
            std::string name = "(";
            for (std::size_t l = 0; l < I.entries().size(); ++l) {
                name += (l ? "," : "") + std::to_string(I.entries()[l]);
            }
            name += ")";
            const auto v = localization_value(d, I);
            loc.add({name, str(v.coefficient()), std::to_string(v.exponent())});
        }
        loc.print(out);
    }
    return kOk;
}

int emit_kclass(const IsotropyData& d, Format fmt, std::ostream& out)
{
    const auto k = k_class(d);
    if (fmt == Format::json) {
        Json obj = json_io::to_json(k);
        obj["n"] = d.n();
        out << obj.dump() << "\n";
    } else {
        out << k << "\n";
    }
    return kOk;
}

int emit_data(const IsotropyData& d, Format fmt, std::ostream& out)
{
    if (fmt == Format::json) {
        out << json_io::to_json(d).dump() << "\n";
    } else {
        out << "n = " << d.n() << ", points = " << d.point_count() << "\n";
        print_multiplicities(multiplicities(d), out);
    }
    return kOk;
}

} // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_format)
{
    CLI::App app{"Semifree isotropy data: ABBV identities, realization witnesses, bordism classes",
                 "isokit"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format;
    std::optional<unsigned> max_degree;
    std::vector<std::string> chern;
    unsigned gen_n = 0;
    unsigned gen_j = 0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "JSON file, directory (check only), inline JSON, or - for stdin");
        cmd->add_option("--format", format, "Output format: json (default) or table");
    };

    auto* check = app.add_subcommand("check", "Evaluate the ABBV identities I_i for i < n");
    add_common(check);
    auto* realize_cmd = app.add_subcommand("realize", "Produce a witness manifold or the defects");
    add_common(realize_cmd);
    auto* bordism = app.add_subcommand("bordism", "Bordism class in Z[s], s = [S^2]; accepts an array of data");
    add_common(bordism);
    auto* identities = app.add_subcommand("identities", "Print I_i for 0 <= i <= max-degree");
    add_common(identities);
    identities->add_option("--max-degree", max_degree, "Largest i to print (default n)");
    identities->add_option("--chern", chern, "Multi-index such as 1,1 for a localization value")
        ->allow_extra_args(false);
    auto* kclass = app.add_subcommand("kclass", "Image in Z[t, tbar]");
    add_common(kclass);

    auto* gen = app.add_subcommand("gen", "Print generator data");
    gen->require_subcommand(1);
    auto* gen_sphere = gen->add_subcommand("sphere-power", "Isotropy data of (S^2)^n");
    gen_sphere->add_option("--n", gen_n, "Dimension")->required();
    gen_sphere->add_option("--format", format, "Output format: json (default) or table");
    auto* gen_rep = gen->add_subcommand("rep-sphere", "Isotropy data of S(V_j + R)");
    gen_rep->add_option("--n", gen_n, "Dimension")->required();
    gen_rep->add_option("--j", gen_j, "Number of conjugate summands")->required();
    gen_rep->add_option("--format", format, "Output format: json (default) or table");

    std::vector<const char*> argv{"isokit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kMalformed;
    }

    try {
        Format fmt = Format::json;
        if (!format.empty()) {
            fmt = parse_format(format, "--format");
        } else if (env_format && !env_format->empty()) {
            fmt = parse_format(*env_format, "ISOKIT_FORMAT");
        }

        if (gen_sphere->parsed()) return emit_data(sphere_power_data(gen_n), fmt, out);
        if (gen_rep->parsed()) return emit_data(rep_sphere_data(gen_n, gen_j), fmt, out);

        if (check->parsed() && !is_inline_json(input) && input != "-" && fs::is_directory(input)) {
            return check_directory(input, fmt, out);
        }

        const Json doc = read_input(input, in);
        if (bordism->parsed()) return emit_bordism(doc, fmt, out);

        const auto d = json_io::data_from_json(doc);
        if (check->parsed()) return emit_check(d, fmt, out);
        if (realize_cmd->parsed()) return emit_realize(d, fmt, out);
        if (identities->parsed()) return emit_identities(d, max_degree, chern, fmt, out);
        if (kclass->parsed()) return emit_kclass(d, fmt, out);
    } catch (const DataError& e) {
        err << "isokit: " << e.what() << "\n";
        return kMalformed;
    }
    return kMalformed;
}

} // namespace isokit::cli
