#pragma once

namespace bondsim {

/// Knobs shared by the figure presets; zero/negative means "preset default".
struct FigureOptions {
    double fit_x_min = -0.96; ///< fig8 sample range [mm]
    double fit_x_max = 0.11;
    int grid_n = 0;           ///< parabolic figures
    double tau_end = 0.0;
};

} // namespace bondsim
