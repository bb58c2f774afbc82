#include "matrix_market.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace rim {

namespace {

enum class Field { real, integer, complex_field, pattern };
enum class Symmetry { general, symmetric, skew, hermitian };

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

[[noreturn]] void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::parse, path + ": " + what);
}

/* Reads the next non-comment, non-blank line. */
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    size_t pos = line.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) continue;
    if (line[pos] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

MatrixMarketData read_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, path + ": cannot open for reading");

  std::string header;
  if (!std::getline(in, header)) parse_fail(path, "empty file");
  std::istringstream hs(header);
  std::string banner, object, format_s, field_s, symmetry_s;
  hs >> banner >> object >> format_s >> field_s >> symmetry_s;
  if (banner != "%%MatrixMarket") parse_fail(path, "missing MatrixMarket banner");
  if (lower(object) != "matrix") parse_fail(path, "object is not 'matrix'");

  format_s = lower(format_s);
  const bool coordinate = format_s == "coordinate";
  if (!coordinate && format_s != "array")
    parse_fail(path, "format must be coordinate or array");

  Field field;
  field_s = lower(field_s);
  if (field_s == "real") field = Field::real;
  else if (field_s == "integer") field = Field::integer;
  else if (field_s == "complex") field = Field::complex_field;
  else if (field_s == "pattern") field = Field::pattern;
  else parse_fail(path, "unsupported field '" + field_s + "'");
  if (field == Field::pattern && !coordinate)
    parse_fail(path, "pattern requires coordinate format");

  Symmetry symmetry;
  symmetry_s = lower(symmetry_s);
  if (symmetry_s == "general") symmetry = Symmetry::general;
  else if (symmetry_s == "symmetric") symmetry = Symmetry::symmetric;
  else if (symmetry_s == "skew-symmetric") symmetry = Symmetry::skew;
  else if (symmetry_s == "hermitian") symmetry = Symmetry::hermitian;
  else parse_fail(path, "unsupported symmetry '" + symmetry_s + "'");

  std::string line;
  if (!next_data_line(in, line)) parse_fail(path, "missing size line");
  std::istringstream ss(line);

  long rows = 0, cols = 0, nnz = 0;
  if (coordinate) {
    if (!(ss >> rows >> cols >> nnz)) parse_fail(path, "bad coordinate size line");
  } else {
    if (!(ss >> rows >> cols)) parse_fail(path, "bad array size line");
    nnz = rows * cols;
  }
  if (rows < 1 || cols < 1) parse_fail(path, "non-positive dimensions");

  MatrixMarketData out;
  out.coordinate = coordinate;
  std::vector<Eigen::Triplet<Complex>> triplets;
  triplets.reserve(static_cast<size_t>(nnz) * (symmetry == Symmetry::general ? 1 : 2));

  auto push = [&](long i, long j, Complex v) {
    if (i < 0 || i >= rows || j < 0 || j >= cols)
      parse_fail(path, "entry index out of range");
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      parse_fail(path, "non-finite entry");
    if (v.imag() != 0.0) out.all_real = false;
    triplets.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
    if (i != j) {
      switch (symmetry) {
        case Symmetry::general: break;
        case Symmetry::symmetric: triplets.emplace_back(static_cast<int>(j), static_cast<int>(i), v); break;
        case Symmetry::skew: triplets.emplace_back(static_cast<int>(j), static_cast<int>(i), -v); break;
        case Symmetry::hermitian: triplets.emplace_back(static_cast<int>(j), static_cast<int>(i), std::conj(v)); break;
      }
    }
  };

  if (coordinate) {
    for (long e = 0; e < nnz; ++e) {
      if (!next_data_line(in, line)) parse_fail(path, "fewer entries than declared");
      std::istringstream es(line);
      long i, j;
      if (!(es >> i >> j)) parse_fail(path, "bad entry line '" + line + "'");
      Complex v;
      if (field == Field::pattern) {
        v = Complex(1.0, 0.0);
      } else if (field == Field::complex_field) {
        double re, im;
        if (!(es >> re >> im)) parse_fail(path, "bad complex entry '" + line + "'");
        v = Complex(re, im);
      } else {
        double re;
        if (!(es >> re)) parse_fail(path, "bad entry value '" + line + "'");
        v = Complex(re, 0.0);
      }
      push(i - 1, j - 1, v);
    }
  } else {
    /* Array format is column-major; symmetric variants store the lower
     * triangle only. */
    for (long j = 0; j < cols; ++j) {
      const long i_begin = symmetry == Symmetry::general ? 0 : j;
      for (long i = i_begin; i < rows; ++i) {
        if (!next_data_line(in, line)) parse_fail(path, "fewer entries than declared");
        std::istringstream es(line);
        Complex v;
        if (field == Field::complex_field) {
          double re, im;
          if (!(es >> re >> im)) parse_fail(path, "bad complex entry '" + line + "'");
          v = Complex(re, im);
        } else {
          double re;
          if (!(es >> re)) parse_fail(path, "bad entry value '" + line + "'");
          v = Complex(re, 0.0);
        }
        if (symmetry == Symmetry::skew && i == j && v != Complex(0.0, 0.0))
          parse_fail(path, "skew-symmetric diagonal must vanish");
        if (v != Complex(0.0, 0.0) || i == j) push(i, j, v);
      }
    }
  }

  out.matrix.resize(static_cast<int>(rows), static_cast<int>(cols));
  out.matrix.setFromTriplets(triplets.begin(), triplets.end());
  out.matrix.makeCompressed();
  return out;
}

Pencil load_matrix_market(const std::string& path_a, const std::string& path_b) {
  MatrixMarketData da = read_matrix_market(path_a);
  MatrixMarketData db = read_matrix_market(path_b);
  if (da.matrix.rows() != da.matrix.cols() || db.matrix.rows() != db.matrix.cols())
    throw Error(ErrorCode::parse, "pencil matrices must be square");
  if (da.matrix.rows() != db.matrix.rows())
    throw Error(ErrorCode::dimension_mismatch,
                "A is " + std::to_string(da.matrix.rows()) + "x" +
                    std::to_string(da.matrix.cols()) + " but B is " +
                    std::to_string(db.matrix.rows()) + "x" +
                    std::to_string(db.matrix.cols()));
  const StorageHint hint = (da.coordinate && db.coordinate)
                               ? StorageHint::sparse
                               : StorageHint::dense;
  if (da.all_real && db.all_real) {
    SparseRealMatrix a = da.matrix.real();
    SparseRealMatrix b = db.matrix.real();
    return Pencil::from_real(std::move(a), std::move(b), hint);
  }
  return Pencil::from_complex(std::move(da.matrix), std::move(db.matrix), hint);
}

namespace {

template <typename Scalar>
void write_one(const Eigen::SparseMatrix<Scalar>& mat, bool complex_field,
               const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw Error(ErrorCode::io, path + ": cannot open for writing");
  std::fprintf(f, "%%%%MatrixMarket matrix coordinate %s general\n",
               complex_field ? "complex" : "real");
  std::fprintf(f, "%ld %ld %ld\n", static_cast<long>(mat.rows()),
               static_cast<long>(mat.cols()), static_cast<long>(mat.nonZeros()));
  for (int k = 0; k < mat.outerSize(); ++k) {
    for (typename Eigen::SparseMatrix<Scalar>::InnerIterator it(mat, k); it; ++it) {
      if constexpr (std::is_same_v<Scalar, double>) {
        std::fprintf(f, "%ld %ld %.17g\n", static_cast<long>(it.row()) + 1,
                     static_cast<long>(it.col()) + 1, it.value());
      } else {
        std::fprintf(f, "%ld %ld %.17g %.17g\n", static_cast<long>(it.row()) + 1,
                     static_cast<long>(it.col()) + 1, it.value().real(),
                     it.value().imag());
      }
    }
  }
  if (std::fclose(f) != 0) throw Error(ErrorCode::io, path + ": write failed");
}

}  // namespace

void save_matrix_market(const Pencil& pencil, const std::string& path_a,
                        const std::string& path_b) {
  if (pencil.is_complex()) {
    write_one(pencil.a_complex(), true, path_a);
    write_one(pencil.b_complex(), true, path_b);
  } else {
    write_one(pencil.a_real(), false, path_a);
    write_one(pencil.b_real(), false, path_b);
  }
}

}  // namespace rim
