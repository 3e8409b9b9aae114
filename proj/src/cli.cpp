#include "z4forms/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "z4forms/brown.hpp"
#include "z4forms/errors.hpp"
#include "z4forms/forms.hpp"
#include "z4forms/fourmanifold.hpp"
#include "z4forms/io.hpp"
#include "z4forms/vanishing.hpp"

namespace z4::cli {

namespace {

using io::json;

bool is_file(const std::string& path) {
    std::error_code ec;
    return std::filesystem::is_regular_file(path, ec);
}

/// Surface names joined by '#': S2, T (torus), K (Klein bottle), RP2.
BilinearForm surface_form_by_name(const std::string& key) {
    BilinearForm out = BilinearForm::hyperbolic(0);
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '#')) {
        if (part == "S2") continue;
        if (part == "T") {
            out = orthogonal_sum(out, BilinearForm::hyperbolic(1));
        } else if (part == "K") {
            out = orthogonal_sum(out, BilinearForm::crosscaps(2));
        } else if (part == "RP2") {
            out = orthogonal_sum(out, BilinearForm::crosscaps(1));
        } else {
            throw ContractViolation("unknown surface '" + part + "' (expected S2, T, K or RP2, joined by #)");
        }
    }
    return out;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + "  " : s + std::string(width - s.size() + 2, ' ');
}

void emit_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

void write_file(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw ContractViolation("cannot write " + path);
    f << j.dump() << '\n';
}

struct Options {
    bool json = false;

    // enumerate
    std::optional<std::size_t> genus;
    std::optional<std::size_t> crosscaps;
    std::string surface_form;

    // shared enhancement input
    std::string enhancement_file;

    // vanishing
    std::optional<std::size_t> vanish_dim;
    bool vanish_max = false;
    bool vanish_lagrangian = false;

    // gm
    std::string gm_form;
    std::string gm_char;
    std::optional<int> gm_beta;
    std::string gm_enhancement;

    // surgery / torsor
    std::string class_bits;
    std::string covector_bits;
    std::string out_file;
};

int cmd_enumerate(const Options& o, std::ostream& out) {
    const int chosen = (o.genus ? 1 : 0) + (o.crosscaps ? 1 : 0) + (o.surface_form.empty() ? 0 : 1);
    if (chosen != 1) throw ContractViolation("enumerate needs exactly one of --genus, --crosscaps, --form");

    BilinearForm form;
    if (o.genus) {
        form = BilinearForm::hyperbolic(*o.genus);
    } else if (o.crosscaps) {
        if (*o.crosscaps == 0) throw ContractViolation("--crosscaps must be at least 1");
        form = BilinearForm::crosscaps(*o.crosscaps);
    } else if (is_file(o.surface_form)) {
        form = io::form_from_json(io::read_json_file(o.surface_form));
    } else {
        form = surface_form_by_name(o.surface_form);
    }

    struct Row {
        std::vector<Z4> values;
        std::optional<int> beta;
        std::optional<std::size_t> max_dim;
    };
    std::vector<Row> rows;
    for_each_enhancement(form, [&rows](const Enhancement& q) {
        Row r{q.basis_values(), std::nullopt, std::nullopt};
        if (q.form().is_nondegenerate()) {
            r.beta = brown_invariant(q).beta.value();
            r.max_dim = max_vanishing_dim(q);
        }
        rows.push_back(std::move(r));
    });

    if (o.json) {
        json arr = json::array();
        for (const auto& r : rows) {
            std::vector<int> values;
            for (Z4 v : r.values) values.push_back(v.value());
            arr.push_back(json{{"values", values},
                               {"beta", r.beta ? json(*r.beta) : json(nullptr)},
                               {"max_vanishing_dim", r.max_dim ? json(*r.max_dim) : json(nullptr)}});
        }
        emit_json(out, arr);
        return kSuccess;
    }

    std::size_t width = std::string("values").size();
    for (const auto& r : rows) width = std::max(width, io::format_values(r.values).size());
    const std::size_t beta_width = std::string("degenerate").size();
    out << pad("values", width) << pad("beta", beta_width) << "max_vanishing_dim\n";
    for (const auto& r : rows) {
        out << pad(io::format_values(r.values), width)
            << pad(r.beta ? std::to_string(*r.beta) : "degenerate", beta_width)
            << (r.max_dim ? std::to_string(*r.max_dim) : "-") << '\n';
    }
    return kSuccess;
}

int cmd_brown(const Options& o, std::ostream& out) {
    const Enhancement q = io::enhancement_from_json(io::read_json_file(o.enhancement_file));
    if (!q.form().is_nondegenerate()) throw DegenerateForm();
    const GaussSumResult g = gauss_sum(q);
    const BrownValue beta = decode_gauss_sum(g);
    if (o.json) {
        emit_json(out, json{{"beta", beta.beta.value()}, {"A", g.a}, {"B", g.b}, {"n", g.n}});
    } else {
        out << "beta=" << beta.beta << " A=" << g.a << " B=" << g.b << " n=" << g.n << '\n';
    }
    return kSuccess;
}

int cmd_vanishing(const Options& o, std::ostream& out) {
    const int chosen = (o.vanish_dim ? 1 : 0) + (o.vanish_max ? 1 : 0) + (o.vanish_lagrangian ? 1 : 0);
    if (chosen != 1) throw ContractViolation("vanishing needs exactly one of --dim, --max, --lagrangian");
    const Enhancement q = io::enhancement_from_json(io::read_json_file(o.enhancement_file));

    if (o.vanish_dim) {
        const auto found = vanishing_subspaces(q, *o.vanish_dim);
        if (o.json) {
            json arr = json::array();
            for (const auto& s : found) {
                json basis = json::array();
                for (const auto& b : s.basis()) basis.push_back(io::to_json(b));
                arr.push_back(basis);
            }
            emit_json(out, json{{"dim", *o.vanish_dim}, {"subspaces", arr}});
        } else if (found.empty()) {
            out << "none\n";
        } else {
            for (const auto& s : found) out << io::format_basis(s) << '\n';
        }
    } else if (o.vanish_max) {
        const std::size_t d = max_vanishing_dim(q);
        if (o.json) {
            emit_json(out, json{{"max_vanishing_dim", d}});
        } else {
            out << d << '\n';
        }
    } else {
        const auto witness = null_lagrangian(q);
        if (o.json) {
            json basis = nullptr;
            if (witness) {
                basis = json::array();
                for (const auto& b : witness->basis()) basis.push_back(io::to_json(b));
            }
            emit_json(out, json{{"lagrangian", witness.has_value()}, {"witness", basis}});
        } else if (witness) {
            out << "yes: " << io::format_basis(*witness) << '\n';
        } else {
            out << "no\n";
        }
    }
    return kSuccess;
}

int cmd_gm(const Options& o, std::ostream& out) {
    if (o.gm_beta && !o.gm_enhancement.empty()) {
        throw ContractViolation("gm takes at most one of --beta, --enhancement");
    }
    const UnimodularForm m = is_file(o.gm_form) ? io::unimodular_from_json(io::read_json_file(o.gm_form))
                                                : UnimodularForm::named(o.gm_form);
    const IntVector coords = is_file(o.gm_char) ? io::char_from_json(io::read_json_file(o.gm_char))
                                                : io::parse_ints(o.gm_char);
    const CharacteristicVector c(m, coords);
    const Z8 required = gm_required_beta(m, c);

    std::optional<Z8> actual;
    if (o.gm_beta) actual = Z8(*o.gm_beta);
    if (!o.gm_enhancement.empty()) {
        actual = brown_invariant(io::enhancement_from_json(io::read_json_file(o.gm_enhancement))).beta;
    }
    const bool pass = !actual || *actual == required;

    if (o.json) {
        json j{{"required_beta", required.value()},
               {"self_intersection", c.square(m)},
               {"signature", signature(m)}};
        if (actual) {
            j["beta"] = actual->value();
            j["verdict"] = pass ? "PASS" : "FAIL";
        }
        emit_json(out, j);
    } else {
        out << "required beta = " << required << '\n';
        if (actual) {
            out << (pass ? "PASS" : "FAIL") << ": beta = " << *actual << '\n';
        }
    }
    return pass ? kSuccess : kFail;
}

int cmd_surgery(const Options& o, std::ostream& out) {
    const Enhancement q = io::enhancement_from_json(io::read_json_file(o.enhancement_file));
    const F2Vector c = io::parse_bits(o.class_bits);
    if (c.dim() != q.dim()) throw ContractViolation("--class has the wrong length for this enhancement");
    const Enhancement reduced = isotropic_reduction(q, c);
    const Z8 before = brown_invariant(q).beta;
    const Z8 after = brown_invariant(reduced).beta;

    if (o.json) {
        emit_json(out, json{{"enhancement", io::to_json(reduced)},
                            {"beta_before", before.value()},
                            {"beta_after", after.value()}});
    } else {
        if (o.out_file.empty()) emit_json(out, io::to_json(reduced));
        out << "beta " << before << " -> " << after << '\n';
    }
    if (!o.out_file.empty()) write_file(o.out_file, io::to_json(reduced));
    if (before != after) throw InternalInconsistency("surgery changed the Brown invariant");
    return kSuccess;
}

int cmd_torsor(const Options& o, std::ostream& out, std::ostream& err) {
    const Enhancement q = io::enhancement_from_json(io::read_json_file(o.enhancement_file));
    const F2Vector bits = io::parse_bits(o.covector_bits);
    if (bits.dim() != q.dim()) throw ContractViolation("--covector has the wrong length for this enhancement");
    const Covector y(bits);
    const Enhancement acted = torsor_act(q, y);
    if (!o.out_file.empty()) write_file(o.out_file, io::to_json(acted));

    if (!q.form().is_nondegenerate()) {
        if (!o.json && o.out_file.empty()) emit_json(out, io::to_json(acted));
        if (o.json) emit_json(out, json{{"enhancement", io::to_json(acted)}});
        err << "delta report skipped: " << DegenerateForm().what() << '\n';
        return kDegenerate;
    }
    const Z8 predicted = predicted_torsor_delta(q, y);
    const Z8 measured = measured_torsor_delta(q, y);
    const bool match = predicted == measured;
    if (o.json) {
        emit_json(out, json{{"enhancement", io::to_json(acted)},
                            {"predicted_delta", predicted.value()},
                            {"measured_delta", measured.value()},
                            {"match", match}});
    } else {
        if (o.out_file.empty()) emit_json(out, io::to_json(acted));
        out << "predicted delta = " << predicted << ", measured delta = " << measured << ": "
            << (match ? "MATCH" : "MISMATCH") << '\n';
    }
    return match ? kSuccess : kFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Z/4 quadratic enhancements of surface intersection forms", "z4forms"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "List every enhancement of a surface form");
    enumerate->add_option("--genus", o.genus, "Closed orientable surface of this genus");
    enumerate->add_option("--crosscaps", o.crosscaps, "Connected sum of this many projective planes");
    enumerate->add_option("--form", o.surface_form, "Form JSON file, or surface names joined by # (S2, T, K, RP2)");

    auto* brown = app.add_subcommand("brown", "Brown invariant and Gauss sum of an enhancement");
    brown->add_option("enhancement", o.enhancement_file, "Enhancement JSON file")->required();

    auto* vanishing = app.add_subcommand("vanishing", "Subspaces on which an enhancement vanishes");
    vanishing->add_option("enhancement", o.enhancement_file, "Enhancement JSON file")->required();
    vanishing->add_option("--dim", o.vanish_dim, "List all q-null subspaces of this dimension");
    vanishing->add_flag("--max", o.vanish_max, "Largest dimension of a q-null subspace");
    vanishing->add_flag("--lagrangian", o.vanish_lagrangian, "Whether a q-null half-dimensional subspace exists");

    auto* gm = app.add_subcommand("gm", "Brown invariant required of a characteristic surface");
    gm->add_option("--form", o.gm_form, "Library form (1, -1, H, E8 joined by +) or JSON file")->required();
    gm->add_option("--char", o.gm_char, "Characteristic vector, comma separated, or JSON file")->required();
    gm->add_option("--beta", o.gm_beta, "Brown invariant to check against the requirement");
    gm->add_option("--enhancement", o.gm_enhancement, "Enhancement JSON file to check");

    auto* surgery = app.add_subcommand("surgery", "Isotropic reduction along a q-null class");
    surgery->add_option("enhancement", o.enhancement_file, "Enhancement JSON file")->required();
    surgery->add_option("--class", o.class_bits, "Class to reduce along, as bits")->required();
    surgery->add_option("--out", o.out_file, "Write the reduced enhancement JSON to this file");

    auto* torsor = app.add_subcommand("torsor", "Act on an enhancement by a covector");
    torsor->add_option("enhancement", o.enhancement_file, "Enhancement JSON file")->required();
    torsor->add_option("--covector", o.covector_bits, "Covector, as bits")->required();
    torsor->add_option("--out", o.out_file, "Write the acted enhancement JSON to this file");

    for (auto* sub : {enumerate, brown, vanishing, gm, surgery, torsor}) {
        sub->add_flag("--json", o.json, "Machine-readable output");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    try {
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o, out);
        if (app.got_subcommand(brown)) return cmd_brown(o, out);
        if (app.got_subcommand(vanishing)) return cmd_vanishing(o, out);
        if (app.got_subcommand(gm)) return cmd_gm(o, out);
        if (app.got_subcommand(surgery)) return cmd_surgery(o, out);
        if (app.got_subcommand(torsor)) return cmd_torsor(o, out, err);
    } catch (const DegenerateForm& e) {
        err << e.what() << '\n';
        return kDegenerate;
    } catch (const ResourceLimit& e) {
        err << e.what() << '\n';
        return kGuard;
    } catch (const NotCharacteristic& e) {
        err << e.what() << '\n';
        return kNotCharacteristic;
    } catch (const SurgeryObstructed& e) {
        err << e.what() << '\n';
        return kObstructed;
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace z4::cli
