#include "montesinos/solver.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace montesinos {

std::string MontesinosKnot::str() const {
    std::string out;
    if (is_pretzel()) {
        out = "P(";
        for (std::size_t i = 0; i < pretzel_twists.size(); ++i)
            out += (i ? "," : "") + pretzel_twists[i].str();
    } else {
        out = "M(";
        for (std::size_t i = 0; i < tangles.size(); ++i)
            out += (i ? "," : "") + tangles[i].slope.str();
    }
    return out + ")";
}

DiagramPoint EdgepathSystem::endpoint(std::size_t i) const {
    const Edgepath& path = paths.at(i);
    const Weights& w = weights.at(i);
    if (path.constant())
        return vertex_coordinates(path.start(), w.x + w.y);
    return endpoint_coordinates(path.final_edge(), w.x, w.y);
}

std::string EdgepathSystem::paths_str() const {
    std::string out;
    for (std::size_t i = 0; i < paths.size(); ++i)
        out += (i ? ";" : "") + paths[i].str();
    return out;
}

KernelResult solve_homogeneous(std::vector<std::vector<Fraction>> rows, std::size_t cols) {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows.size())
            continue;
        std::swap(rows[rank], rows[pivot]);
        Fraction inv = Fraction(1) / rows[rank][col];
        for (std::size_t j = col; j < cols; ++j)
            rows[rank][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero())
                continue;
            Fraction factor = rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[r][j] -= factor * rows[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    KernelResult result;
    result.dimension = static_cast<int>(cols - rank);
    if (result.dimension != 1)
        return result;

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col)
        is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col])
        ++free_col;

    result.ray.assign(cols, Fraction(0));
    result.ray[free_col] = Fraction(1);
    for (std::size_t r = 0; r < rank; ++r)
        result.ray[pivot_col[r]] = -rows[r][free_col];
    return result;
}

namespace {

struct EndpointForm {
    // endpoint coordinates as x * near + y * far
    DiagramPoint near;  // per unit weight on the near end
    DiagramPoint far;
};

EndpointForm endpoint_form(const Edgepath& path) {
    if (path.constant()) {
        DiagramPoint v = vertex_coordinates(path.start(), 1);
        return {v, v};
    }
    return {vertex_coordinates(path.final_edge().from, 1),
            vertex_coordinates(path.final_edge().to, 1)};
}

void validate_input(const MontesinosKnot& knot, const std::vector<Edgepath>& paths) {
    if (knot.arity() < 3)
        throw std::invalid_argument("solve_system: need at least three tangles");
    if (paths.size() != knot.arity())
        throw std::invalid_argument("solve_system: one path per tangle required");
    for (std::size_t i = 0; i < paths.size(); ++i)
        if (!(paths[i].tangle == knot.tangles[i]))
            throw std::invalid_argument("solve_system: path does not start at its tangle");
}

}  // namespace

std::optional<EdgepathSystem> solve_system(const MontesinosKnot& knot,
                                           const std::vector<Edgepath>& paths,
                                           SolveOutcome* outcome) {
    validate_input(knot, paths);
    const std::size_t n = paths.size();
    const std::size_t cols = 2 * n;  // x_i at 2i, y_i at 2i+1

    std::vector<EndpointForm> forms;
    forms.reserve(n);
    for (const Edgepath& p : paths)
        forms.push_back(endpoint_form(p));

    std::vector<std::vector<Fraction>> rows;
    auto row = [&]() -> std::vector<Fraction>& {
        rows.emplace_back(cols, Fraction(0));
        return rows.back();
    };

    for (std::size_t i = 1; i < n; ++i) {  // equal sheet counts
        auto& r = row();
        r[0] = Fraction(forms[0].near.a);
        r[1] = Fraction(forms[0].far.a);
        r[2 * i] = -Fraction(forms[i].near.a);
        r[2 * i + 1] = -Fraction(forms[i].far.a);
    }
    for (std::size_t i = 1; i < n; ++i) {  // endpoints on one vertical line
        auto& r = row();
        r[0] = Fraction(forms[0].near.b);
        r[1] = Fraction(forms[0].far.b);
        r[2 * i] = -Fraction(forms[i].near.b);
        r[2 * i + 1] = -Fraction(forms[i].far.b);
    }
    {
        auto& r = row();  // vertical coordinates sum to zero
        for (std::size_t i = 0; i < n; ++i) {
            r[2 * i] = Fraction(forms[i].near.c);
            r[2 * i + 1] = Fraction(forms[i].far.c);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {  // constant paths carry no far weight
        if (paths[i].constant()) {
            auto& r = row();
            r[2 * i + 1] = Fraction(1);
        }
    }

    auto fail = [&](SolveOutcome why) -> std::optional<EdgepathSystem> {
        if (outcome)
            *outcome = why;
        return std::nullopt;
    };

    KernelResult kernel = solve_homogeneous(std::move(rows), cols);
    if (kernel.dimension == 0)
        return fail(SolveOutcome::no_solution);
    if (kernel.dimension > 1)
        return fail(SolveOutcome::degenerate_solution_space);

    // scale the ray to the minimal integer point
    BigInt den_lcm = 1;
    for (const Fraction& f : kernel.ray)
        den_lcm = lcm(den_lcm, f.denominator());
    std::vector<BigInt> vec(cols);
    BigInt content = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        vec[j] = kernel.ray[j].numerator() * (den_lcm / kernel.ray[j].denominator());
        content = gcd(content, vec[j]);
    }
    for (BigInt& v : vec)
        v /= content;

    BigInt sheets = vec[0] + vec[1];
    if (sheets < 0) {
        for (BigInt& v : vec)
            v = -v;
        sheets = -sheets;
    }
    if (sheets == 0)
        return fail(SolveOutcome::not_positive);
    for (const BigInt& v : vec)
        if (v < 0)
            return fail(SolveOutcome::not_positive);

    EdgepathSystem system{knot, paths, {}, sheets};
    system.weights.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        system.weights.push_back(Weights{vec[2 * i], vec[2 * i + 1]});
    if (outcome)
        *outcome = SolveOutcome::solved;
    return system;
}

BigInt sheet_count(const EdgepathSystem& system) {
    BigInt s = 1;
    for (std::size_t i = 0; i < system.paths.size(); ++i) {
        if (system.paths[i].constant())
            continue;
        Fraction length(system.weights[i].y, system.sheets);
        s = lcm(s, length.denominator());
    }
    return s;
}

namespace {

struct BRange {
    Fraction lo, hi;  // endpoint b-coordinate per sheet
};

BRange b_range(const Edgepath& path) {
    EndpointForm f = endpoint_form(path);
    Fraction lo(f.near.b), hi(f.far.b);
    if (hi < lo)
        std::swap(lo, hi);
    return {lo, hi};
}

std::vector<EdgepathSystem> sweep_impl(const MontesinosKnot& knot, const SweepOptions& opts,
                                       bool parallel) {
    const std::size_t n = knot.arity();
    std::vector<std::vector<Edgepath>> menus;
    menus.reserve(n);
    std::size_t total = 1;
    for (const Tangle& t : knot.tangles) {
        menus.push_back(enumerate_edgepaths(t, opts.max_edges));
        total *= menus.back().size();
    }

    std::vector<std::vector<BRange>> ranges(n);
    for (std::size_t i = 0; i < n; ++i)
        for (const Edgepath& p : menus[i])
            ranges[i].push_back(b_range(p));

    auto solve_combo = [&](std::size_t index, std::vector<EdgepathSystem>& sink) {
        std::vector<std::size_t> pick(n);
        std::size_t rest = index;
        for (std::size_t i = 0; i < n; ++i) {
            pick[i] = rest % menus[i].size();
            rest /= menus[i].size();
        }
        Fraction lo = ranges[0][pick[0]].lo, hi = ranges[0][pick[0]].hi;
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::max(lo, ranges[i][pick[i]].lo);
            hi = std::min(hi, ranges[i][pick[i]].hi);
            if (hi < lo)
                return;  // endpoint b-ranges cannot meet
        }
        std::vector<Edgepath> paths;
        paths.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            paths.push_back(menus[i][pick[i]]);
        if (auto system = solve_system(knot, paths))
            sink.push_back(std::move(*system));
    };

    std::vector<EdgepathSystem> found;
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel
        {
            std::vector<EdgepathSystem> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
                solve_combo(static_cast<std::size_t>(idx), local);
#pragma omp critical(montesinos_sweep_merge)
            found.insert(found.end(), std::make_move_iterator(local.begin()),
                         std::make_move_iterator(local.end()));
        }
#else
        for (std::size_t idx = 0; idx < total; ++idx)
            solve_combo(idx, found);
#endif
    } else {
        for (std::size_t idx = 0; idx < total; ++idx)
            solve_combo(idx, found);
    }

    std::sort(found.begin(), found.end(),
              [](const EdgepathSystem& a, const EdgepathSystem& b) {
                  return a.paths_str() < b.paths_str();
              });
    return found;
}

}  // namespace

std::vector<EdgepathSystem> sweep_systems(const MontesinosKnot& knot, const SweepOptions& opts) {
    return sweep_impl(knot, opts, true);
}

std::vector<EdgepathSystem> sweep_systems_serial(const MontesinosKnot& knot,
                                                 const SweepOptions& opts) {
    return sweep_impl(knot, opts, false);
}

}  // namespace montesinos
