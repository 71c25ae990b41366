#pragma once

// Data behind the C^(alpha,inf) versus |m| figures: hydrogen n = 15 in
// position (fig1) and momentum (fig2) space, and the oscillator shell
// e = 15 (fig3). Variant a uses alpha = 0.5, variant b alpha = 2.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "gencomplex/complexity.hpp"
#include "gencomplex/quantum.hpp"

namespace gencomplex {

enum class FigureId { Fig1a, Fig1b, Fig2a, Fig2b, Fig3a, Fig3b };

inline constexpr FigureId kAllFigures[] = {FigureId::Fig1a, FigureId::Fig1b, FigureId::Fig2a,
                                           FigureId::Fig2b, FigureId::Fig3a, FigureId::Fig3b};

inline std::string to_string(FigureId id)
{
    static const char* names[] = {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b"};
    return names[static_cast<int>(id)];
}

inline std::optional<FigureId> parse_figure_id(const std::string& s)
{
    for (FigureId id : kAllFigures)
        if (to_string(id) == s)
            return id;
    return std::nullopt;
}

struct FigureRow {
    int l = 0;
    int abs_m = 0;
    double value = 0.0;    // C^(alpha,inf)
    double r_alpha = 0.0;
    double sup_norm = 0.0;
};

struct FigureDefinition {
    enum class System { Hydrogen, Oscillator } system;
    Space space;
    double alpha;
    int principal;    // n for hydrogen, shell e for the oscillator
};

inline constexpr int kFigureHydrogenN = 15;
inline constexpr int kFigureHydrogenL[] = {5, 10, 14};
inline constexpr int kFigureOscillatorShell = 15;

inline FigureDefinition figure_definition(FigureId id)
{
    using System = FigureDefinition::System;
    switch (id) {
    case FigureId::Fig1a:
        return {System::Hydrogen, Space::Position, 0.5, kFigureHydrogenN};
    case FigureId::Fig1b:
        return {System::Hydrogen, Space::Position, 2.0, kFigureHydrogenN};
    case FigureId::Fig2a:
        return {System::Hydrogen, Space::Momentum, 0.5, kFigureHydrogenN};
    case FigureId::Fig2b:
        return {System::Hydrogen, Space::Momentum, 2.0, kFigureHydrogenN};
    case FigureId::Fig3a:
        return {System::Oscillator, Space::Position, 0.5, kFigureOscillatorShell};
    case FigureId::Fig3b:
        break;
    }
    return {System::Oscillator, Space::Position, 2.0, kFigureOscillatorShell};
}

/// Densities of the figure's state set, in row order (ascending l, then |m|).
inline std::vector<std::pair<FigureRow, Density>> figure_states(FigureId id)
{
    const auto def = figure_definition(id);
    std::vector<std::pair<FigureRow, Density>> out;
    if (def.system == FigureDefinition::System::Hydrogen) {
        for (int l : kFigureHydrogenL)
            for (int m = 0; m <= l; ++m)
                out.emplace_back(FigureRow{l, m}, hydrogen_density({def.principal, l, m, def.space}));
        return out;
    }
    auto shell = oscillator_shell(def.principal);
    std::sort(shell.begin(), shell.end(), [](auto a, auto b) { return a.second < b.second; });
    for (auto [n, l] : shell)
        for (int m = 0; m <= l; ++m)
            out.emplace_back(FigureRow{l, m}, oscillator_density({n, l, m, 1.0, def.space}));
    return out;
}

// Rows are computed concurrently, written into fixed slots and sorted by
// (l, |m|), so the output does not depend on scheduling.
inline std::vector<FigureRow> compute_figure(FigureId id, const QuadratureSpec& spec = {},
                                             unsigned threads = std::thread::hardware_concurrency())
{
    const auto def = figure_definition(id);
    auto states = figure_states(id);
    std::vector<FigureRow> rows(states.size());
    const auto alpha = OrderParam::finite(def.alpha);

    auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < states.size(); i += stride) {
            const auto c = complexity(states[i].second, alpha, OrderParam::infinity(), spec);
            FigureRow row = states[i].first;
            row.value = c.value;
            row.r_alpha = c.r_alpha.value;
            row.sup_norm = std::exp(-c.r_beta.value);
            rows[i] = row;
        }
    };
    const std::size_t workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(states.size())));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 1; w < workers; ++w)
        jobs.push_back(std::async(std::launch::async, work, w, workers));
    work(0, workers);
    for (auto& j : jobs)
        j.get();

    std::sort(rows.begin(), rows.end(),
              [](const FigureRow& a, const FigureRow& b) { return std::pair{a.l, a.abs_m} < std::pair{b.l, b.abs_m}; });
    return rows;
}

/// Fixed 17-significant-digit formatting.
inline std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void write_figure_csv(std::ostream& os, const std::vector<FigureRow>& rows)
{
    os << "l,abs_m,complexity,r_alpha,sup_norm\n";
    for (const auto& r : rows)
        os << r.l << ',' << r.abs_m << ',' << format_real(r.value) << ',' << format_real(r.r_alpha) << ','
           << format_real(r.sup_norm) << '\n';
}

}  // namespace gencomplex
