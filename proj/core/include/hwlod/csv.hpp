#pragma once

#include <string>
#include <vector>

#include "hwlod/axis.hpp"
#include "hwlod/field.hpp"
#include "hwlod/presets.hpp"

namespace hwlod {

/// Locale-independent decimal formatting with 17 significant digits; all CSV
/// output funnels through this so identical runs produce identical bytes.
std::string format_double(double v);

/// Header i,j,x,y,value; row-major in j.
void write_field_csv(const std::string& path, const Field2D& field, const Grid2D& grid);

/// Header index,node,midpoint,primal_width,dual_width. The midpoint column
/// holds x_{i+1/2}; the last row has no primal width and leaves it empty.
void write_axis_csv(const std::string& path, const Axis& axis);

/// Header time,node,value for one time-indexed edge profile.
void write_boundary_csv(const std::string& path, const std::vector<std::vector<double>>& levels, const Axis& axis,
                        double tau);

/// Header block,n,m,k,e_c,rc_c,e_l2,rc_l2,e_rmse,rc_rmse (undisplayed norms
/// left empty).
void write_table_csv(const std::string& path, const TableResult& table);

/// Header x,u2d,u1d.
void write_compare_csv(const std::string& path, const std::vector<double>& x, const std::vector<double>& u2d,
                       const std::vector<double>& u1d);

/// Header step,time,min_value.
void write_diagnostics_csv(const std::string& path, const std::vector<double>& step_min, double tau);

/// Aligned text rendering of a study table for the console.
std::string format_table_text(const TableResult& table);

}  // namespace hwlod
