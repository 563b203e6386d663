// obtool: exact invariants of abstract open book decompositions.
//
// Exit codes: 0 success, 2 parse error, 3 semantic/validation error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "openbook/report.hpp"
#include "openbook/textio.hpp"

#include "vendor/CLI11.hpp"

using namespace openbook;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void print_invariants(std::ostream& out, const OpenBook& ob, const ManifoldInvariants& inv) {
    if (!ob.label.empty()) out << "label: " << ob.label << "\n";
    out << "surface: genus " << ob.page.genus() << ", " << ob.page.boundary_components()
        << " boundary component" << (ob.page.boundary_components() == 1 ? "" : "s") << "\n";
    out << "page b1: " << inv.page_betti << "\n";
    out << "manifold b1: " << inv.manifold_betti << "\n";
    out << "torsion: " << torsion_str(inv.torsion) << "\n";
    out << "literal fixed rank: " << inv.literal_fixed_dim
        << (inv.literal_fixed_dim != inv.manifold_betti ? "  (readings differ)" : "") << "\n";
}

struct Options {
    bool json = false;
    std::size_t budget = kDefaultWordBudget;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of abstract open book decompositions"};
    app.require_subcommand(1);

    Options opt;
    app.add_flag("--json", opt.json, "emit a JSON report");
    app.add_option("--max-word-length", opt.budget,
                   "word-growth budget in letters (default 1000000)");

    std::function<void()> action;

    // --- invariants / s2s1 / trivial -----------------------------------------
    std::string path, path2;
    auto* inv_cmd = app.add_subcommand("invariants", "homological invariants of the manifold");
    inv_cmd->add_option("file", path, "open book file")->required();
    inv_cmd->callback([&] {
        action = [&] {
            OpenBook ob = parse_open_book(read_file(path), opt.budget);
            if (opt.json) {
                std::cout << report_json(ob).dump(2) << "\n";
            } else {
                print_invariants(std::cout, ob, invariants(ob));
            }
        };
    });

    auto* s2s1_cmd =
        app.add_subcommand("s2s1", "compare with the connected sum of page-rank many S^2 x S^1");
    s2s1_cmd->add_option("file", path, "open book file")->required();
    s2s1_cmd->callback([&] {
        action = [&] {
            OpenBook ob = parse_open_book(read_file(path), opt.budget);
            if (opt.json) {
                std::cout << report_json(ob).dump(2) << "\n";
            } else {
                FactorReport fr = factor_report(ob);
                print_invariants(std::cout, ob, fr.inv);
                std::cout << "verdict: " << verdict_str(fr.verdict) << "\n";
                std::cout << "s2s1 factors: at most " << fr.s2s1_upper_bound << " of "
                          << fr.inv.page_betti << "\n";
                std::cout << "certificate: " << fr.certificate << "\n";
            }
        };
    });

    auto* triv_cmd = app.add_subcommand("trivial", "is the monodromy the identity mapping class?");
    triv_cmd->add_option("file", path, "open book file")->required();
    triv_cmd->callback([&] {
        action = [&] {
            OpenBook ob = parse_open_book(read_file(path), opt.budget);
            if (opt.json) {
                std::cout << report_json(ob).dump(2) << "\n";
            } else {
                FactorReport fr = factor_report(ob);
                std::cout << "trivial: " << (fr.trivial ? "yes" : "no") << "\n";
                std::cout << "certificate: " << fr.certificate << "\n";
            }
        };
    });

    // --- braid ----------------------------------------------------------------
    int strands = 2;
    std::string braid_text;
    auto* braid_cmd = app.add_subcommand("braid", "braid closures via the double branched cover");
    braid_cmd->require_subcommand(1);
    auto add_braid_opts = [&](CLI::App* c) {
        c->add_option("-n,--strands", strands, "number of strands")->required();
        c->add_option("-w,--word", braid_text, "braid word, e.g. \"s1 s2^-1\"")
            ->required();
    };
    auto* lift_cmd = braid_cmd->add_subcommand("lift", "open book of the double branched cover");
    add_braid_opts(lift_cmd);
    lift_cmd->callback([&] {
        action = [&] {
            BraidWord w = parse_braid(strands, braid_text);
            Surface page = braid_cover_page(w.strands);
            std::vector<std::pair<std::string, int>> twists;
            for (int l : w.letters)
                twists.emplace_back(Surface::chain_name(std::abs(l)), l > 0 ? 1 : -1);
            std::string label = "double cover of the closure of " + w.str();
            std::string file = emit_twist_file(page, twists, label);
            if (opt.json) {
                OpenBook cover = lift_to_cover(w, opt.budget);
                nlohmann::json j = report_json(cover);
                j["file"] = file;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << file;
            }
        };
    });
    auto* check_cmd = braid_cmd->add_subcommand("check", "unlink obstruction for the closure");
    add_braid_opts(check_cmd);
    check_cmd->callback([&] {
        action = [&] {
            BraidWord w = parse_braid(strands, braid_text);
            UnlinkReport r = unlink_obstruction(w, opt.budget);
            if (opt.json) {
                std::cout << unlink_json(w, r).dump(2) << "\n";
            } else {
                std::cout << "strands: " << w.strands << "\n";
                std::cout << "closure components: " << closure_components(w) << "\n";
                std::cout << "cover manifold b1: " << r.cover.manifold_betti << "\n";
                std::cout << "cover torsion: " << torsion_str(r.cover.torsion) << "\n";
                std::cout << "verdict: " << r.verdict << "\n";
                std::cout << "certificate: " << r.certificate << "\n";
            }
        };
    });

    // --- transform --------------------------------------------------------------
    auto* tr_cmd = app.add_subcommand("transform", "plumbing and boundary connected sum");
    tr_cmd->require_subcommand(1);
    std::string sign_text = "+1";
    int self_at = 0;
    std::vector<int> merge_at;
    auto* plumb_cmd = tr_cmd->add_subcommand("plumb", "plumb on a Hopf band");
    plumb_cmd->add_option("file", path, "open book file")->required();
    plumb_cmd->add_option("--sign", sign_text, "+1 (positive band, default) or -1");
    plumb_cmd->add_option("--self", self_at, "attach both plumbing arcs to this component");
    plumb_cmd->add_option("--merge", merge_at, "attach the arcs to these two components")
        ->expected(2);
    plumb_cmd->callback([&] {
        action = [&] {
            OpenBook ob = parse_open_book(read_file(path), opt.budget);
            int sign;
            if (sign_text == "+1" || sign_text == "1")
                sign = 1;
            else if (sign_text == "-1")
                sign = -1;
            else
                throw SemanticError("sign must be +1 or -1");
            PlumbAttach attach;  // default: the normalized attachment
            if (self_at != 0 && !merge_at.empty())
                throw SemanticError("--self and --merge are mutually exclusive");
            if (self_at != 0) attach = PlumbAttach::self_at(self_at);
            if (!merge_at.empty()) attach = PlumbAttach::merge_at(merge_at[0], merge_at[1]);
            OpenBook out = hopf_plumb(ob, sign, attach, opt.budget);
            if (opt.json) {
                nlohmann::json j = report_json(out);
                j["file"] = emit_open_book(out);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << emit_open_book(out);
            }
        };
    });
    auto* consum_cmd = tr_cmd->add_subcommand("consum", "boundary connected sum of two open books");
    consum_cmd->add_option("file", path, "first open book file")->required();
    consum_cmd->add_option("file2", path2, "second open book file")->required();
    consum_cmd->callback([&] {
        action = [&] {
            OpenBook a = parse_open_book(read_file(path), opt.budget);
            OpenBook b = parse_open_book(read_file(path2), opt.budget);
            OpenBook out = boundary_connected_sum(a, b, opt.budget);
            if (opt.json) {
                nlohmann::json j = report_json(out);
                j["file"] = emit_open_book(out);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << emit_open_book(out);
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        action();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
