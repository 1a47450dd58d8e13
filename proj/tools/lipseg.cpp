// lipseg: LIP-algebra image transforms, region homogeneity measures,
// homogeneity-driven region growing, component-tree segmentation, and
// the lighting-invariance experiment harness.
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lip/algebra.hpp"
#include "lip/criteria.hpp"
#include "lip/ct_segment.hpp"
#include "lip/errors.hpp"
#include "lip/image.hpp"
#include "lip/max_tree.hpp"
#include "lip/pnm.hpp"
#include "lip/region_grow.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitInvarianceFailed = 3;

void emit_report(const json& report, const std::string& path) {
    if (path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw lip::IoError(path + ": cannot open for writing");
        out << report.dump(2) << "\n";
    }
}

std::pair<int, int> parse_seed(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos)
        throw std::domain_error("seed '" + spec + "' is not of the form x,y");
    try {
        const int x = std::stoi(spec.substr(0, comma));
        const int y = std::stoi(spec.substr(comma + 1));
        return {x, y};
    } catch (const std::exception&) {
        throw std::domain_error("seed '" + spec + "' is not of the form x,y");
    }
}

lip::RegionMask seeds_to_mask(const std::vector<std::string>& specs, const lip::GreyImage& img) {
    lip::RegionMask mask(img.width(), img.height());
    for (const std::string& spec : specs) {
        const auto [x, y] = parse_seed(spec);
        if (!img.inside(x, y))
            throw std::domain_error("seed (" + std::to_string(x) + ", " + std::to_string(y) +
                                    ") lies outside the image support");
        mask.set(x, y);
    }
    return mask;
}

lip::StructuringElement parse_se(const std::string& spec) {
    int a = 0, b = 0;
    char sep = 0;
    std::istringstream in(spec);
    if (!(in >> a >> sep >> b) || (sep != 'x' && sep != 'X') || a != b)
        throw std::domain_error("structuring element '" + spec + "' is not of the form KxK");
    return lip::StructuringElement::square(a);
}

lip::Connectivity parse_connectivity(int c) {
    if (c == 4) return lip::Connectivity::Four;
    if (c == 8) return lip::Connectivity::Eight;
    throw std::domain_error("connectivity must be 4 or 8");
}

json triplet_json(double base, double dark, double bright) {
    return json::array({base, dark, bright});
}

double max_pairwise_deviation(double a, double b, double c) {
    return std::max({std::fabs(a - b), std::fabs(a - c), std::fabs(b - c)});
}

// ---- transform ------------------------------------------------------------

struct TransformArgs {
    std::string input, output, report;
    std::optional<double> add, sub, mul;
    bool complement = false;
};

int run_transform(const TransformArgs& args) {
    const lip::GreyImage img = lip::read_image(args.input);
    lip::TransformOp op;
    double amount;
    if (args.add) {
        op = lip::TransformOp::Add;
        amount = *args.add;
    } else if (args.sub) {
        op = lip::TransformOp::Sub;
        amount = *args.sub;
    } else {
        op = lip::TransformOp::Mul;
        amount = *args.mul;
    }
    const lip::GreyImage out = lip::quantize(lip::lip_transform_image(img, op, amount, args.complement));
    lip::write_pgm(out, args.output);

    json report{{"command", "transform"},
                {"input", args.input},
                {"output", args.output},
                {"op", args.add ? "lip-add" : args.sub ? "lip-sub" : "lip-mul"},
                {"amount", amount},
                {"complement", args.complement}};
    emit_report(report, args.report);
    return kExitOk;
}

// ---- homogeneity ----------------------------------------------------------

struct HomogeneityArgs {
    std::string image, mask, criterion = "add", report;
    bool complement = false;
};

int run_homogeneity(const HomogeneityArgs& args) {
    const lip::GreyImage img = lip::read_image(args.image);
    const lip::RegionMask region = lip::read_mask_pgm(args.mask);
    lip::require_same_dims(img, region);
    if (region.empty()) throw std::domain_error("region mask is empty");

    const lip::CriterionKind kind = lip::criterion_from_name(args.criterion);
    const lip::GreyImage& eval = args.complement ? lip::complement_image(img) : img;
    const double value = lip::criterion_value(kind, eval, region);

    json report{{"command", "homogeneity"}, {"input", args.image},
                {"mask", args.mask},        {"criterion", args.criterion},
                {"complement", args.complement}, {"region_pixels", region.count()},
                {"value", value}};
    emit_report(report, args.report);
    return kExitOk;
}

// ---- grow -----------------------------------------------------------------

struct GrowArgs {
    std::string image, out, report, se = "3x3";
    std::vector<std::string> seeds;
    std::string criterion = "add";
    std::optional<double> threshold;
    int connectivity = 4;
    int max_iterations = 0;
    std::optional<bool> complement;
};

json trace_json(const lip::GrowTrace& trace) {
    json steps = json::array();
    for (const lip::GrowStep& s : trace.steps)
        steps.push_back({{"iteration", s.iteration},
                         {"step", lip::step_name(s.kind)},
                         {"region_pixels", s.region_size},
                         {"criterion", s.criterion},
                         {"accepted", s.accepted}});
    return steps;
}

int run_grow(const GrowArgs& args) {
    const lip::GreyImage img = lip::read_image(args.image);
    const lip::RegionMask seed = seeds_to_mask(args.seeds, img);

    lip::GrowConfig cfg;
    cfg.criterion = lip::criterion_from_name(args.criterion);
    cfg.se = parse_se(args.se);
    cfg.connectivity = parse_connectivity(args.connectivity);
    cfg.max_iterations = args.max_iterations;

    // stock thresholds for the two LIP criteria
    if (args.threshold) {
        cfg.threshold = *args.threshold;
    } else if (cfg.criterion == lip::CriterionKind::LipAdditive) {
        cfg.threshold = 200.0;
    } else if (cfg.criterion == lip::CriterionKind::LipMultiplicative) {
        cfg.threshold = 2.7;
    } else {
        throw std::domain_error("--threshold is required for criterion '" + args.criterion + "'");
    }
    // the LIP criteria act on the complement scale by default
    cfg.work_in_complement =
        args.complement.value_or(cfg.criterion == lip::CriterionKind::LipAdditive ||
                                 cfg.criterion == lip::CriterionKind::LipMultiplicative);

    const lip::GrowResult res = lip::grow(img, seed, cfg);
    if (!args.out.empty()) lip::write_mask_pgm(res.region, args.out);

    json report{{"command", "grow"},
                {"input", args.image},
                {"seeds", args.seeds},
                {"criterion", args.criterion},
                {"threshold", cfg.threshold},
                {"structuring_element", args.se},
                {"connectivity", args.connectivity},
                {"complement", cfg.work_in_complement},
                {"iterations", res.iterations},
                {"region_pixels", res.region.count()},
                {"criterion_value", res.criterion_value},
                {"out", args.out},
                {"trace", trace_json(res.trace)}};
    emit_report(report, args.report);
    return kExitOk;
}

// ---- segment-ct -----------------------------------------------------------

struct SegmentCtArgs {
    std::string image, out, report, dump_tree_path;
    std::vector<std::string> seeds;
    double alpha = 0.0;
    int connectivity = 4;
};

int run_segment_ct(const SegmentCtArgs& args) {
    const lip::GreyImage img = lip::quantize(lip::read_image(args.image));
    const lip::RegionMask seed = seeds_to_mask(args.seeds, img);
    // the marker G is the seed set dilated by the 3x3 square
    const lip::RegionMask g = lip::dilate(seed, lip::StructuringElement::square(3));

    const lip::MaxTree tree = lip::build_max_tree(img, parse_connectivity(args.connectivity));
    if (!args.dump_tree_path.empty()) {
        std::ofstream out(args.dump_tree_path);
        if (!out) throw lip::IoError(args.dump_tree_path + ": cannot open for writing");
        out << lip::dump_tree(tree);
    }
    const lip::CtSegmentation seg = lip::segment_ct(tree, g, {args.alpha});
    if (!args.out.empty()) lip::write_mask_pgm(seg.region, args.out);

    json report{{"command", "segment-ct"},
                {"input", args.image},
                {"seeds", args.seeds},
                {"alpha", args.alpha},
                {"connectivity", args.connectivity},
                {"marker_pixels", g.count()},
                {"region_pixels", seg.region.count()},
                {"selected_nodes", seg.selected_nodes},
                {"cost", seg.cost},
                {"false_negatives", seg.false_negatives},
                {"false_positives", seg.false_positives},
                {"out", args.out}};
    emit_report(report, args.report);
    return kExitOk;
}

// ---- experiment-invariance ------------------------------------------------

struct InvarianceArgs {
    std::string image, mask, mode = "additive", report;
    double k = 120.0;
    double lambda_dark = 4.0;
    double lambda_bright = 0.1;
    std::optional<double> tolerance;
};

int run_invariance(const InvarianceArgs& args) {
    const lip::GreyImage img = lip::read_image(args.image);
    const lip::RegionMask region = lip::read_mask_pgm(args.mask);
    lip::require_same_dims(img, region);
    if (region.empty()) throw std::domain_error("region mask is empty");

    const bool additive = args.mode == "additive";
    if (!additive && args.mode != "multiplicative")
        throw std::domain_error("mode must be 'additive' or 'multiplicative'");
    const lip::CriterionKind kind =
        additive ? lip::CriterionKind::LipAdditive : lip::CriterionKind::LipMultiplicative;

    const auto darken_op = additive ? lip::TransformOp::Add : lip::TransformOp::Mul;
    const auto brighten_op = additive ? lip::TransformOp::Sub : lip::TransformOp::Mul;
    const double dark_amount = additive ? args.k : args.lambda_dark;
    const double bright_amount = additive ? args.k : args.lambda_bright;

    const auto criterion_of = [&](const lip::GreyImage& f) {
        return lip::criterion_value(kind, lip::complement_image(f), region);
    };

    // real-valued path: the invariance is exact up to rounding
    const lip::GreyImage dark = lip::lip_transform_image(img, darken_op, dark_amount, true);
    const lip::GreyImage bright = lip::lip_transform_image(img, brighten_op, bright_amount, true);
    const double v0 = criterion_of(img);
    const double vd = criterion_of(dark);
    const double vb = criterion_of(bright);
    const double dev_real = max_pairwise_deviation(v0, vd, vb);

    // quantized 8-bit path: rounding moves the extrema by up to half a level
    const lip::GreyImage img_q = lip::quantize(img);
    const double q0 = criterion_of(img_q);
    const double qd = criterion_of(lip::quantize(lip::lip_transform_image(img_q, darken_op, dark_amount, true)));
    const double qb = criterion_of(lip::quantize(lip::lip_transform_image(img_q, brighten_op, bright_amount, true)));
    const double dev_quantized = max_pairwise_deviation(q0, qd, qb);

    const double tolerance = args.tolerance.value_or(additive ? 1e-9 * 256.0 : 1e-9);
    const bool passed = additive ? dev_real <= tolerance : dev_real / v0 <= tolerance;

    json report{{"command", "experiment-invariance"},
                {"input", args.image},
                {"mask", args.mask},
                {"mode", args.mode},
                {"region_pixels", region.count()},
                {"values_real", triplet_json(v0, vd, vb)},
                {"max_deviation_real", dev_real},
                {"values_quantized", triplet_json(q0, qd, qb)},
                {"max_deviation_quantized", dev_quantized},
                {"tolerance", tolerance},
                {"passed", passed}};
    if (additive)
        report["k"] = args.k;
    else
        report["lambdas"] = json::array({args.lambda_dark, args.lambda_bright});
    emit_report(report, args.report);
    return passed ? kExitOk : kExitInvarianceFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Logarithmic image processing segmentation toolkit"};
    app.require_subcommand(1);

    TransformArgs targs;
    CLI::App* transform = app.add_subcommand(
        "transform", "Apply a LIP lighting transform and write the result as PGM");
    transform->add_option("input", targs.input, "Input image (PGM or PNG)")->required();
    transform->add_option("output", targs.output, "Output PGM path")->required();
    auto* op_add = transform->add_option("--lip-add", targs.add, "LIP-add a constant");
    auto* op_sub = transform->add_option("--lip-sub", targs.sub, "LIP-subtract a constant");
    auto* op_mul = transform->add_option("--lip-mul", targs.mul, "LIP-multiply by a scalar");
    op_add->excludes(op_sub)->excludes(op_mul);
    op_sub->excludes(op_mul);
    transform->add_flag("--complement", targs.complement,
                        "Apply the operation to the image complement f^c");
    transform->add_option("--report", targs.report, "Write the JSON report here");

    HomogeneityArgs hargs;
    CLI::App* homog = app.add_subcommand("homogeneity", "Evaluate a homogeneity criterion over a region");
    homog->add_option("image", hargs.image)->required();
    homog->add_option("mask", hargs.mask, "Region mask (PGM, nonzero = inside)")->required();
    homog->add_option("--criterion", hargs.criterion, "add | mul | variance | dynamic")
        ->check(CLI::IsMember({"add", "mul", "variance", "dynamic"}));
    homog->add_flag("--complement", hargs.complement, "Evaluate on f^c");
    homog->add_option("--report", hargs.report);

    GrowArgs gargs;
    CLI::App* growc = app.add_subcommand("grow", "Homogeneity-driven region growing from seed points");
    growc->add_option("image", gargs.image)->required();
    growc->add_option("--seed", gargs.seeds, "Seed pixel as x,y (repeatable)")->required();
    growc->add_option("--criterion", gargs.criterion, "add | mul | variance | dynamic")
        ->check(CLI::IsMember({"add", "mul", "variance", "dynamic"}));
    growc->add_option("--threshold", gargs.threshold,
                      "Homogeneity threshold t (default 200 for add, 2.7 for mul)");
    growc->add_option("--se", gargs.se, "Structuring element, e.g. 3x3");
    growc->add_option("--connectivity", gargs.connectivity)->check(CLI::IsMember({4, 8}));
    growc->add_option("--max-iterations", gargs.max_iterations,
                      "Outer iteration cap (0 = 10 * max(width, height))");
    growc->add_flag("--complement,!--no-complement", gargs.complement,
                    "Work on f^c (default for add and mul)");
    growc->add_option("--out", gargs.out, "Write the final mask here (PGM, 255 = region)");
    growc->add_option("--report", gargs.report);

    SegmentCtArgs cargs;
    CLI::App* ctseg = app.add_subcommand(
        "segment-ct", "Component-tree segmentation minimizing d^alpha against dilated seeds");
    ctseg->add_option("image", cargs.image)->required();
    ctseg->add_option("--seed", cargs.seeds, "Seed pixel as x,y (repeatable)")->required();
    ctseg->add_option("--alpha", cargs.alpha, "Weight of false positives in d^alpha")
        ->check(CLI::Range(0.0, 1.0));
    ctseg->add_option("--connectivity", cargs.connectivity)->check(CLI::IsMember({4, 8}));
    ctseg->add_option("--out", cargs.out);
    ctseg->add_option("--report", cargs.report);
    ctseg->add_option("--dump-tree", cargs.dump_tree_path,
                      "Write the max-tree as text lines (id parent level area proper)");

    InvarianceArgs iargs;
    CLI::App* inv = app.add_subcommand(
        "experiment-invariance",
        "Check the criterion triplet across darkened/brightened variants");
    inv->add_option("image", iargs.image)->required();
    inv->add_option("mask", iargs.mask)->required();
    inv->add_option("--mode", iargs.mode, "additive | multiplicative")
        ->check(CLI::IsMember({"additive", "multiplicative"}));
    inv->add_option("--k", iargs.k, "Constant for the additive variants");
    inv->add_option("--lambda-dark", iargs.lambda_dark);
    inv->add_option("--lambda-bright", iargs.lambda_bright);
    inv->add_option("--tolerance", iargs.tolerance,
                    "Real-path tolerance (absolute for additive, relative for multiplicative)")
        ->check(CLI::NonNegativeNumber);
    inv->add_option("--report", iargs.report);

    try {
        app.parse(argc, argv);
        if (transform->parsed()) {
            if (!targs.add && !targs.sub && !targs.mul)
                throw std::domain_error("one of --lip-add, --lip-sub, --lip-mul is required");
            return run_transform(targs);
        }
        if (homog->parsed()) return run_homogeneity(hargs);
        if (growc->parsed()) return run_grow(gargs);
        if (ctseg->parsed()) return run_segment_ct(cargs);
        if (inv->parsed()) return run_invariance(iargs);
        return kExitPrecondition;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    } catch (const lip::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
}
