#include "hwlod/csv.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hwlod {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary: no newline translation anywhere
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    return out;
}

std::string format_rate(const std::optional<double>& rc) {
    if (!rc) return "";
    return format_double(*rc);
}

bool wants(const TableResult& t, const std::string& norm) {
    for (const auto& n : t.norms)
        if (n == norm) return true;
    return false;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

void write_field_csv(const std::string& path, const Field2D& field, const Grid2D& grid) {
    auto out = open_out(path);
    out << "i,j,x,y,value\n";
    for (int j = 0; j < field.ny; ++j)
        for (int i = 0; i < field.nx; ++i)
            out << i << ',' << j << ',' << format_double(grid.x.node(i)) << ',' << format_double(grid.y.node(j))
                << ',' << format_double(field.at(i, j)) << '\n';
}

void write_axis_csv(const std::string& path, const Axis& axis) {
    auto out = open_out(path);
    out << "index,node,midpoint,primal_width,dual_width\n";
    const int n = axis.intervals();
    for (int i = 0; i <= n; ++i) {
        out << i << ',' << format_double(axis.node(i)) << ',' << format_double(axis.mid_hi(i)) << ',';
        if (i < n) out << format_double(axis.h(i));
        out << ',' << format_double(axis.hbar(i)) << '\n';
    }
}

void write_boundary_csv(const std::string& path, const std::vector<std::vector<double>>& levels, const Axis& axis,
                        double tau) {
    auto out = open_out(path);
    out << "time,node,value\n";
    for (std::size_t k = 0; k < levels.size(); ++k)
        for (std::size_t i = 0; i < levels[k].size(); ++i)
            out << format_double(static_cast<double>(k) * tau) << ',' << format_double(axis.node(static_cast<int>(i)))
                << ',' << format_double(levels[k][i]) << '\n';
}

void write_table_csv(const std::string& path, const TableResult& table) {
    auto out = open_out(path);
    out << "block,n,m,k,e_c,rc_c,e_l2,rc_l2,e_rmse,rc_rmse\n";
    for (const TableBlock& block : table.blocks) {
        for (const ConvergenceRow& row : block.rows) {
            out << block.title << ',' << row.n << ',' << row.m << ',' << row.k << ',';
            if (wants(table, "c")) out << format_double(row.e_c) << ',' << format_rate(row.rc_c);
            else out << ',';
            out << ',';
            if (wants(table, "l2")) out << format_double(row.e_l2) << ',' << format_rate(row.rc_l2);
            else out << ',';
            out << ',';
            if (wants(table, "rmse")) out << format_double(row.e_rmse) << ',' << format_rate(row.rc_rmse);
            else out << ',';
            out << '\n';
        }
    }
}

void write_compare_csv(const std::string& path, const std::vector<double>& x, const std::vector<double>& u2d,
                       const std::vector<double>& u1d) {
    if (x.size() != u2d.size() || x.size() != u1d.size())
        throw std::invalid_argument("write_compare_csv: column length mismatch");
    auto out = open_out(path);
    out << "x,u2d,u1d\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << format_double(x[i]) << ',' << format_double(u2d[i]) << ',' << format_double(u1d[i]) << '\n';
}

void write_diagnostics_csv(const std::string& path, const std::vector<double>& step_min, double tau) {
    auto out = open_out(path);
    out << "step,time,min_value\n";
    for (std::size_t k = 0; k < step_min.size(); ++k)
        out << (k + 1) << ',' << format_double(static_cast<double>(k + 1) * tau) << ',' << format_double(step_min[k])
            << '\n';
}

std::string format_table_text(const TableResult& table) {
    std::ostringstream os;
    os << "table " << table.id << ": " << table.description << "\n";
    for (const TableBlock& block : table.blocks) {
        os << "\n[" << block.title << "]\n";
        os << std::left << std::setw(16) << "mesh";
        if (wants(table, "c")) os << std::setw(13) << "E_c" << std::setw(8) << "RC";
        if (wants(table, "l2")) os << std::setw(13) << "E_l2" << std::setw(8) << "RC";
        if (wants(table, "rmse")) os << std::setw(13) << "E_rmse" << std::setw(8) << "RC";
        os << "\n";
        for (const ConvergenceRow& row : block.rows) {
            os << std::left << std::setw(16) << row.label;
            auto put = [&os](double e, const std::optional<double>& rc) {
                std::ostringstream es;
                es << std::scientific << std::setprecision(3) << e;
                os << std::setw(13) << es.str();
                if (rc) {
                    std::ostringstream rs;
                    rs << std::fixed << std::setprecision(2) << *rc;
                    os << std::setw(8) << rs.str();
                } else {
                    os << std::setw(8) << "-";
                }
            };
            if (wants(table, "c")) put(row.e_c, row.rc_c);
            if (wants(table, "l2")) put(row.e_l2, row.rc_l2);
            if (wants(table, "rmse")) put(row.e_rmse, row.rc_rmse);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace hwlod
