#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace embedrank {

// Row-major so the in-memory layout matches npy/CSV payloads byte for byte.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

// One embedder's outputs over a shared sample set. Row i of every matrix in a
// corpus refers to the same underlying sample i.
struct EmbeddingMatrix {
    std::string embedder_id;
    std::string dataset_id;
    Matrix values;  // N x d, finite

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index dim() const { return values.cols(); }
};

struct Corpus {
    std::string dataset_id;
    Eigen::Index sample_count = 0;
    std::vector<EmbeddingMatrix> members;
};

struct SplitIndices {
    std::vector<Eigen::Index> train;
    std::vector<Eigen::Index> heldout;
};

}  // namespace embedrank
