// chset: command-line front end for the changeable-set library.
//
// Subcommands: validate, chronologize, simultaneity, fate-lines, visibility,
// image, oracle {monotone-chron, internal-time, visibility, generate}.
// Reports are JSON by default (--format text renders plain tables).
// Exit codes: 0 pass, 1 verified-fail (a counterexample/violation was
// found), 2 usage or IO error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chset/chset.hpp"

namespace {

using chset::Json;

struct Options {
    std::string format = "json";
    unsigned seed = 0;
    std::size_t limit = 0;  // 0: use defaults; set via --limit or CHSET_LIMIT
    std::string emit;
};

std::size_t effective_limit(const Options& opt, std::size_t fallback) {
    if (opt.limit != 0) return opt.limit;
    if (const char* env = std::getenv("CHSET_LIMIT")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return fallback;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) chset::fail("IoError", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) chset::fail("IoError", "cannot write " + path);
    out << bytes;
}

// A report renders as JSON or as indented text; pass/fail drives the exit
// code, partial is reported as success (the command itself worked).
struct Report {
    std::string command;
    std::string verdict = "pass";  // pass | fail | partial
    std::string mode = "exhaustive";
    Json findings = Json::array();

    void finding(const Json& f) { findings.push_back(f); }

    int render(const Options& opt) const {
        Json j{{"command", command},
               {"findings", findings},
               {"mode", mode},
               {"verdict", verdict}};
        if (opt.format == "text") {
            std::cout << command << ": " << verdict << " (" << mode << ")\n";
            for (const auto& f : findings) {
                std::cout << " ";
                for (auto it = f.begin(); it != f.end(); ++it)
                    std::cout << " " << it.key() << "=" << it.value().dump();
                std::cout << "\n";
            }
        } else {
            std::cout << j.dump(2) << "\n";
        }
        return verdict == "fail" ? 1 : 0;
    }
};

void emit_document(const Options& opt, const chset::Document& doc) {
    if (!opt.emit.empty()) write_file(opt.emit, chset::serialize(doc));
}

// ---- subcommand bodies --------------------------------------------------

int cmd_validate(const Options& opt, const std::string& file,
                 const std::string& want_kind) {
    Report rep;
    rep.command = "validate " + file;
    chset::Document doc;
    try {
        doc = chset::parse_document(slurp(file));
    } catch (const chset::Error& e) {
        // structural errors are usage/IO; semantic axiom failures are
        // verified fails with the violation as the witness
        const std::string& code = e.code();
        if (code == "MalformedJson" || code == "SchemaViolation" ||
            code == "UnsupportedVersion" || code == "IoError")
            throw;
        rep.verdict = "fail";
        rep.finding(Json{{"error", code}, {"detail", e.what()}});
        return rep.render(opt);
    }
    if (!want_kind.empty() && doc.kind != want_kind) {
        rep.verdict = "fail";
        rep.finding(Json{{"error", "KindMismatch"},
                         {"detail", "document kind is " + doc.kind}});
        return rep.render(opt);
    }
    rep.finding(Json{{"kind", doc.kind}});
    // Parsing already enforced the per-kind axioms (times, bases, coverage);
    // changeable sets additionally get the unification axiom scan.
    if (const auto* z = std::get_if<chset::ChangeableSet>(&doc.body)) {
        chset::CheckMode mode;
        mode.exhaustive_limit = effective_limit(opt, mode.exhaustive_limit);
        std::size_t largest = 0;
        for (const auto& id : z->frame_ids())
            largest = std::max(largest, chset::frame_states(*z, id).size());
        if (largest > mode.exhaustive_limit) {
            mode.exhaustive = false;
            mode.seed = opt.seed;
            rep.mode = "sampled(seed=" + std::to_string(opt.seed) +
                       ",n=" + std::to_string(mode.samples) + ")";
        }
        for (const auto& v : chset::check_unification(*z, mode)) {
            rep.verdict = "fail";
            rep.finding(Json{{"axiom", v.axiom},
                             {"frames", Json::array({v.l, v.m, v.p})},
                             {"detail", v.detail}});
        }
    }
    return rep.render(opt);
}

int cmd_chronologize(const Options& opt, const std::string& file,
                     const std::string& mode, std::size_t k) {
    Report rep;
    rep.command = "chronologize " + file + " --mode " + mode;
    chset::Document doc = chset::parse_document(slurp(file));
    const auto* os = std::get_if<chset::OrientedSet>(&doc.body);
    if (!os) chset::fail("SchemaViolation", "/kind: expected an oriented-set document");
    chset::Chronologization c;
    try {
        if (mode == "trivial")
            c = chset::trivial_chronologization(*os, k);
        else if (mode == "cyclic")
            c = chset::chronologize_cyclic(*os);
        else if (mode == "chain")
            c = chset::chronologize_chain(*os);
        else if (mode == "any")
            c = chset::chronologize_any(*os);
        else
            chset::fail("UsageError", "unknown mode " + mode);
    } catch (const chset::Error& e) {
        if (e.code() == "UsageError") throw;
        rep.verdict = "fail";
        rep.finding(Json{{"error", e.code()}, {"detail", e.what()}});
        return rep.render(opt);
    }
    chset::TimeKindFlags flags = chset::time_kind(*os, c);
    rep.finding(Json{{"time_kind",
                      Json{{"incessant", flags.incessant},
                           {"monotone", flags.monotone},
                           {"one_point", flags.one_point},
                           {"quasi_one_point", flags.quasi_one_point},
                           {"strictly_monotone", flags.strictly_monotone}}}});
    emit_document(opt, chset::make_document("chronologization", c));
    return rep.render(opt);
}

int cmd_simultaneity(const Options& opt, const std::string& file_os,
                     const std::string& file_y, bool want_internal) {
    Report rep;
    rep.command = "simultaneity " + file_os + " " + file_y;
    chset::Document dos = chset::parse_document(slurp(file_os));
    chset::Document dy = chset::parse_document(slurp(file_y));
    const auto* os = std::get_if<chset::OrientedSet>(&dos.body);
    const auto* y = std::get_if<chset::Simultaneity>(&dy.body);
    if (!os) chset::fail("SchemaViolation", "/kind: expected an oriented-set document");
    if (!y) chset::fail("SchemaViolation", "/kind: expected a simultaneity document");
    if (!chset::is_simultaneity(*os, *y)) {
        rep.verdict = "fail";
        rep.finding(Json{{"error", "NotASimultaneity"},
                         {"detail", "union of classes != base"}});
        return rep.render(opt);
    }
    bool unrepeatable = chset::is_unrepeatable(*os, y->classes);
    bool precise = chset::is_precise(*os, *y);
    bool connected = chset::is_monotone_connected(*os, *y);
    rep.finding(Json{{"is_monotone_connected", connected},
                     {"is_precise", precise},
                     {"is_unrepeatable", unrepeatable}});
    if (want_internal) {
        try {
            chset::Chronologization c = chset::internal_time(*os, *y);
            chset::TimeKindFlags flags = chset::time_kind(*os, c);
            rep.finding(Json{{"internal_time_strictly_monotone", flags.strictly_monotone},
                             {"scale_length", c.scale.points.size()}});
            emit_document(opt, chset::make_document("chronologization", c));
        } catch (const chset::Error& e) {
            rep.verdict = "fail";
            rep.finding(Json{{"error", e.code()}, {"detail", e.what()}});
        }
    }
    return rep.render(opt);
}

int cmd_fate_lines(const Options& opt, const std::string& file, bool roundtrip) {
    Report rep;
    rep.command = "fate-lines " + file;
    chset::Document doc = chset::parse_document(slurp(file));
    const auto* b = std::get_if<chset::BasicChangeableSet>(&doc.body);
    if (!b) chset::fail("SchemaViolation", "/kind: expected a bcs document");
    Json lines = Json::array();
    for (const auto& line : chset::fate_lines(*b))
        lines.push_back(chset::jio::write_ets_set(line));
    rep.finding(Json{{"count", lines.size()}, {"fate_lines", lines}});
    if (roundtrip) {
        bool ok = chset::roundtrip_holds(*b);
        rep.finding(Json{{"roundtrip", ok}});
        if (!ok) rep.verdict = "fail";
    }
    return rep.render(opt);
}

int cmd_visibility(const Options& opt, const std::string& file, bool matrix,
                   bool classes, bool criterion) {
    Report rep;
    rep.command = "visibility " + file;
    chset::Document doc = chset::parse_document(slurp(file));
    const auto* z = std::get_if<chset::ChangeableSet>(&doc.body);
    if (!z) chset::fail("SchemaViolation", "/kind: expected a changeable-set document");
    if (!matrix && !classes && !criterion) matrix = classes = criterion = true;

    if (matrix) {
        if (opt.format == "text") {
            std::size_t width = 4;
            for (const auto& id : z->frame_ids()) width = std::max(width, id.size());
            std::cout << std::string(width, ' ');
            for (const auto& m : z->frame_ids())
                std::cout << "  " << m << std::string(width - m.size(), ' ');
            std::cout << "\n";
            for (const auto& l : z->frame_ids()) {
                std::cout << l << std::string(width - l.size(), ' ');
                for (const auto& m : z->frame_ids()) {
                    std::string g = chset::grade_name(chset::frame_grade(*z, l, m));
                    std::cout << "  " << g.substr(0, width)
                              << std::string(width > g.size() ? width - g.size() : 0, ' ');
                }
                std::cout << "\n";
            }
        }
        Json mat = Json::object();
        for (const auto& l : z->frame_ids()) {
            Json row = Json::object();
            for (const auto& m : z->frame_ids())
                row[m] = chset::grade_name(chset::frame_grade(*z, l, m));
            mat[l] = row;
        }
        rep.finding(Json{{"matrix", mat}});
    }
    if (classes) {
        auto blocks = [](const chset::FramePartition& p) {
            Json out = Json::array();
            for (const auto& block : p.blocks)
                out.push_back(chset::jio::write_token_set(block));
            return out;
        };
        rep.finding(Json{{"precise_visibility_classes",
                          blocks(chset::precise_visibility_classes(*z))},
                         {"visibility_classes", blocks(chset::visibility_classes(*z))}});
    }
    if (criterion) {
        chset::CheckMode mode;
        mode.exhaustive_limit = effective_limit(opt, mode.exhaustive_limit);
        bool crit = chset::composition_criterion(*z, mode);
        bool precv = chset::is_precisely_visible_cset(*z);
        rep.finding(Json{{"composition_criterion", crit},
                         {"precisely_visible", precv}});
        if (crit != precv) rep.verdict = "fail";  // would contradict the theorem
    }
    return rep.render(opt);
}

int cmd_image(const Options& opt, const std::string& file_bcs,
              const std::string& file_map) {
    Report rep;
    rep.command = "image " + file_bcs + " " + file_map;
    chset::Document db = chset::parse_document(slurp(file_bcs));
    chset::Document du = chset::parse_document(slurp(file_map));
    const auto* b = std::get_if<chset::BasicChangeableSet>(&db.body);
    const auto* u = std::get_if<chset::TransMap>(&du.body);
    if (!b) chset::fail("SchemaViolation", "/kind: expected a bcs document");
    if (!u) chset::fail("SchemaViolation", "/kind: expected a trans-map document");
    chset::BasicChangeableSet img = chset::image_basic(*b, *u);
    rep.finding(Json{{"states", chset::ets_of(img.pcs).size()}});
    emit_document(opt, chset::make_document("bcs", img));
    return rep.render(opt);
}

int cmd_oracle_monotone(const Options& opt, const std::string& file,
                        std::size_t bound) {
    Report rep;
    rep.command = "oracle monotone-chron " + file;
    chset::Document doc = chset::parse_document(slurp(file));
    const auto* os = std::get_if<chset::OrientedSet>(&doc.body);
    if (!os) chset::fail("SchemaViolation", "/kind: expected an oriented-set document");
    auto found = chset::oracle_monotone_chron(*os, bound, effective_limit(opt, 6));
    rep.mode = "exhaustive(scale<=" + std::to_string(bound) + ")";
    if (found) {
        rep.finding(Json{{"found", true},
                         {"scale_length", found->scale.points.size()}});
        emit_document(opt, chset::make_document("chronologization", *found));
    } else {
        // a negative answer is only exhaustive within the scale bound
        rep.verdict = "partial";
        rep.finding(Json{{"found", false},
                         {"note", "no monotone time with scale length <= " +
                                      std::to_string(bound) +
                                      "; longer scales were not searched"}});
    }
    auto obstruction = chset::monotone_obstruction(*os);
    rep.finding(Json{{"obstruction_present", obstruction.has_value()}});
    return rep.render(opt);
}

int cmd_oracle_internal(const Options& opt, const std::string& file_os,
                        const std::string& file_y) {
    Report rep;
    rep.command = "oracle internal-time " + file_os + " " + file_y;
    chset::Document dos = chset::parse_document(slurp(file_os));
    chset::Document dy = chset::parse_document(slurp(file_y));
    const auto* os = std::get_if<chset::OrientedSet>(&dos.body);
    const auto* y = std::get_if<chset::Simultaneity>(&dy.body);
    if (!os) chset::fail("SchemaViolation", "/kind: expected an oriented-set document");
    if (!y) chset::fail("SchemaViolation", "/kind: expected a simultaneity document");
    chset::Chronologization internal = chset::internal_time(*os, *y);
    auto candidates = chset::oracle_internal_time_candidates(*os, *y);
    rep.mode = "exhaustive(scale<=" + std::to_string(y->classes.size() + 2) + ")";
    bool unique = true;
    for (const auto& c : candidates)
        if (!chset::chronologizations_equivalent(c, internal)) unique = false;
    rep.finding(Json{{"candidates", candidates.size()},
                     {"unique_up_to_equivalence", unique}});
    if (candidates.empty() || !unique) rep.verdict = "fail";
    emit_document(opt, chset::make_document("chronologization", internal));
    return rep.render(opt);
}

int cmd_oracle_visibility(const Options& opt, const std::string& file) {
    Report rep;
    rep.command = "oracle visibility " + file;
    chset::Document doc = chset::parse_document(slurp(file));
    const auto* z = std::get_if<chset::ChangeableSet>(&doc.body);
    if (!z) chset::fail("SchemaViolation", "/kind: expected a changeable-set document");
    auto diffs = chset::oracle_visibility_diff(*z, effective_limit(opt, 8));
    for (const auto& d : diffs) {
        rep.verdict = "fail";
        rep.finding(Json{{"frames", Json::array({d.l, d.m})},
                         {"fast", chset::grade_name(d.fast)},
                         {"oracle", chset::grade_name(d.oracle)}});
    }
    if (diffs.empty()) rep.finding(Json{{"grades_agree", true}});
    return rep.render(opt);
}

int cmd_oracle_generate(const Options& opt, const std::string& kind,
                        std::size_t count, std::size_t max_elems) {
    if (count == 0 || max_elems == 0) chset::fail("BadBounds", "bounds must be positive");
    chset::Rng rng(opt.seed);
    for (std::size_t i = 0; i < count; ++i) {
        chset::Document doc;
        if (kind == "oriented-set")
            doc = chset::make_document(kind, chset::random_oriented_set(rng, max_elems));
        else if (kind == "trajectory-system")
            doc = chset::make_document(kind,
                                       chset::random_trajectory_system(rng, max_elems));
        else if (kind == "bcs")
            doc = chset::make_document(kind, chset::random_bcs(rng, max_elems));
        else if (kind == "cset")
            doc = chset::make_document("changeable-set",
                                       chset::random_cset(rng, 3, max_elems));
        else
            chset::fail("BadBounds", "unknown generator kind " + kind);
        std::cout << chset::serialize(doc);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chset: finite models of changeable sets"};
    app.require_subcommand(1);

    Options opt;
    app.fallthrough();  // accept the global options after a subcommand too
    app.add_option("--format", opt.format, "json|text")->default_val("json");
    app.add_option("--seed", opt.seed, "seed for sampled modes and generators");
    app.add_option("--limit", opt.limit, "override size caps (also CHSET_LIMIT)");
    app.add_option("--emit", opt.emit, "write constructed document here");

    std::string file, file2, kind, mode = "any";
    std::size_t k = 2, bound = 5, count = 1, max_elems = 6;
    bool want_internal = false, roundtrip = false;
    bool matrix = false, classes = false, criterion = false;

    auto* validate = app.add_subcommand("validate", "run axiom checks on a document");
    validate->add_option("file", file)->required();
    validate->add_option("--kind", kind, "require this document kind");

    auto* chron = app.add_subcommand("chronologize", "construct a time");
    chron->add_option("file", file)->required();
    chron->add_option("--mode", mode, "trivial|cyclic|chain|any")->default_val("any");
    chron->add_option("--k", k, "scale length for --mode trivial");

    auto* simul = app.add_subcommand("simultaneity", "analyze a simultaneity");
    simul->add_option("file-os", file)->required();
    simul->add_option("file-y", file2)->required();
    simul->add_flag("--internal-time", want_internal, "construct the internal time");

    auto* fate = app.add_subcommand("fate-lines", "list fate lines");
    fate->add_option("file", file)->required();
    fate->add_flag("--roundtrip", roundtrip, "verify the reconstruction round-trip");

    auto* vis = app.add_subcommand("visibility", "frame visibility analysis");
    vis->add_option("file", file)->required();
    vis->add_flag("--matrix", matrix);
    vis->add_flag("--classes", classes);
    vis->add_flag("--criterion", criterion);

    auto* image = app.add_subcommand("image", "image under a transforming mapping");
    image->add_option("file-bcs", file)->required();
    image->add_option("file-map", file2)->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force verifiers");
    oracle->require_subcommand(1);
    auto* omc = oracle->add_subcommand("monotone-chron", "search monotone times");
    omc->add_option("file", file)->required();
    omc->add_option("--scale-bound", bound)->default_val(5);
    auto* oit = oracle->add_subcommand("internal-time", "uniqueness search");
    oit->add_option("file-os", file)->required();
    oit->add_option("file-y", file2)->required();
    auto* ovi = oracle->add_subcommand("visibility", "definitional grade recomputation");
    ovi->add_option("file", file)->required();
    auto* ogen = oracle->add_subcommand("generate", "emit random valid documents");
    ogen->add_option("--kind", kind, "oriented-set|trajectory-system|bcs|cset")
        ->required();
    ogen->add_option("--count", count)->default_val(1);
    ogen->add_option("--max-elems", max_elems)->default_val(6);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(opt, file, kind);
        if (*chron) return cmd_chronologize(opt, file, mode, k);
        if (*simul) return cmd_simultaneity(opt, file, file2, want_internal);
        if (*fate) return cmd_fate_lines(opt, file, roundtrip);
        if (*vis) return cmd_visibility(opt, file, matrix, classes, criterion);
        if (*image) return cmd_image(opt, file, file2);
        if (*omc) return cmd_oracle_monotone(opt, file, bound);
        if (*oit) return cmd_oracle_internal(opt, file, file2);
        if (*ovi) return cmd_oracle_visibility(opt, file);
        if (*ogen) return cmd_oracle_generate(opt, kind, count, max_elems);
    } catch (const chset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
