#include "ternary/opmap.hpp"

#include "ternary/errors.hpp"

namespace ternary {

OpMap::OpMap(Mat matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols()) throw InputError("linear map matrix must be square");
}

OpMap OpMap::from_function(std::size_t dim, const std::function<Vec(const Vec&)>& f) {
    Mat m(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) m.set_column(j, f(unit_vec(dim, j)));
    return OpMap(std::move(m));
}

}  // namespace ternary
