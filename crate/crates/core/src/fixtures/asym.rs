use super::AsymFixture;

pub const ASYM: [AsymFixture; 9] = [
    AsymFixture {
        id: 547324,
        vertices: [[2, 3, 8], [1, 0, 0], [0, 1, 0], [-1, -1, -1]],
        lambda_: (1, 2),
        v_delta: [1, 1, 2],
        weights: [1, 5, 6, 8],
        facet_normals: [[-2, -2, 1], [-1, -1, 3], [-1, 3, -1], [7, -3, -1]],
        theta_plus: [[2, 3, 8], [1, 0, 0], [0, 1, 0]],
        n_theta_plus: [-2, -2, 1],
        theta_cap: [[-1, 3, -1], [-1, -1, 1], [1, -1, 0]],
        supp: &[[-2, -2, 1], [-1, -1, 1], [-1, -1, 2], [-1, -1, 3], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 3, -1], [0, -1, 1], [0, -1, 2], [0, 0, 1], [0, 1, 0], [1, -1, 0], [1, -1, 1], [1, 0, 0], [2, -1, 0]],
        can_extra: &[[0, 1, 4]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547323,
        vertices: [[-1, 1, -2], [1, -2, 3], [1, 0, 0], [-2, 5, -3]],
        lambda_: (2, 3),
        v_delta: [0, 1, 0],
        weights: [1, 4, 7, 9],
        facet_normals: [[-3, -3, -2], [-1, 0, 1], [-1, 6, 4], [17, 3, -5]],
        theta_plus: [[1, -2, 3], [1, 0, 0], [-2, 5, -3]],
        n_theta_plus: [-3, -3, -2],
        theta_cap: [[-1, 0, 1], [-1, 0, 0], [2, 0, -1]],
        supp: &[[-3, -3, -2], [-1, 0, 0], [-1, 0, 1], [-1, 1, 1], [-1, 2, 2], [-1, 3, 2], [-1, 4, 3], [-1, 6, 4], [0, 1, 1], [0, 2, 1], [0, 3, 2], [0, 5, 3], [1, 1, 0], [1, 2, 1], [1, 4, 2], [2, 0, -1], [2, 1, 0], [2, 3, 1], [3, 2, 0], [4, 1, -1]],
        can_extra: &[[-2, 4, -3]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547311,
        vertices: [[-1, 4, 2], [-1, -1, 0], [0, 0, -1], [2, 0, 1]],
        lambda_: (2, 3),
        v_delta: [0, 1, 1],
        weights: [2, 5, 8, 9],
        facet_normals: [[-1, -1, 1], [-1, 2, 1], [1, 2, -5], [7, -2, 5]],
        theta_plus: [[-1, 4, 2], [-1, -1, 0], [2, 0, 1]],
        n_theta_plus: [1, 2, -5],
        theta_cap: [[-1, -1, 1], [0, 1, -1], [1, 0, 0]],
        supp: &[[-1, -1, 1], [-1, 0, 1], [-1, 1, 1], [-1, 2, 1], [0, 0, 1], [0, 1, -1], [0, 1, 0], [0, 1, 1], [1, 0, 0], [1, 0, 1], [1, 2, -5]],
        can_extra: &[[-1, 2, 0]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547490,
        vertices: [[1, 2, 4], [1, 0, 0], [1, -2, 3], [-1, 1, -2]],
        lambda_: (1, 2),
        v_delta: [0, 1, 0],
        weights: [1, 5, 8, 14],
        facet_normals: [[-2, -2, 1], [-1, 0, 0], [-1, 6, 4], [23, 2, -8]],
        theta_plus: [[1, 2, 4], [1, 0, 0], [-1, 1, -2]],
        n_theta_plus: [-2, -2, 1],
        theta_cap: [[-1, 0, 0], [-1, 0, 1], [3, 0, -1]],
        supp: &[[-2, -2, 1], [-1, 0, 0], [-1, 0, 1], [-1, 1, 1], [-1, 2, 2], [-1, 3, 2], [-1, 4, 3], [-1, 6, 4], [0, 1, 1], [0, 2, 1], [0, 3, 2], [0, 5, 3], [1, 0, 0], [1, 1, 0], [1, 2, 1], [1, 4, 2], [2, 1, 0], [2, 3, 1], [3, 0, -1], [3, 2, 0], [4, 1, -1]],
        can_extra: &[[1, -1, 4]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547321,
        vertices: [[1, -2, 3], [0, 1, 0], [1, 0, 0], [-6, 3, -8]],
        lambda_: (1, 2),
        v_delta: [-1, 1, -2],
        weights: [3, 7, 8, 10],
        facet_normals: [[-3, -3, -2], [-2, -2, 1], [-1, 3, 2], [9, -5, -8]],
        theta_plus: [[0, 1, 0], [1, 0, 0], [-6, 3, -8]],
        n_theta_plus: [-2, -2, 1],
        theta_cap: [[-1, -1, 0], [-1, 3, 2], [1, -1, -1]],
        supp: &[[-2, -2, 1], [-1, -1, 0], [-1, 0, 0], [-1, 1, 1], [-1, 3, 2], [0, -1, -1], [1, -1, -1]],
        can_extra: &[[1, 0, 1], [0, -3, 4]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547305,
        vertices: [[0, 1, 0], [1, 0, 0], [1, 2, 4], [-4, -6, -7]],
        lambda_: (2, 3),
        v_delta: [-1, -1, -1],
        weights: [4, 7, 9, 10],
        facet_normals: [[-7, -7, 11], [-2, -2, 1], [-1, 2, -1], [7, -3, -1]],
        theta_plus: [[0, 1, 0], [1, 2, 4], [-4, -6, -7]],
        n_theta_plus: [7, -3, -1],
        theta_cap: [[-1, 2, -1], [1, -1, 0], [0, -1, 1]],
        supp: &[[-1, -1, 1], [-1, 0, 0], [-1, 2, -1], [0, -1, 1], [1, -1, 0], [7, -3, -1]],
        can_extra: &[[0, -2, -3], [1, 2, 2]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547526,
        vertices: [[1, 0, 0], [0, 1, 0], [-2, 1, 5], [2, -4, -9]],
        lambda_: (2, 3),
        v_delta: [1, -1, -3],
        weights: [5, 9, 8, 11],
        facet_normals: [[-5, -5, -2], [-3, -3, 1], [-1, 2, -1], [25, -8, 10]],
        theta_plus: [[1, 0, 0], [0, 1, 0], [2, -4, -9]],
        n_theta_plus: [-3, -3, 1],
        theta_cap: [[-1, -1, 0], [-1, 2, -1], [2, -1, 1]],
        supp: &[[-3, -3, 1], [-1, -1, 0], [-1, 2, -1], [0, -1, 0], [2, -1, 1]],
        can_extra: &[[0, 1, 3], [-3, 1, 6]],
        can_drop: &[[-2, 1, 5]],
    },
    AsymFixture {
        id: 547454,
        vertices: [[2, 1, 7], [1, 0, 0], [0, 1, 0], [-2, -3, -3]],
        lambda_: (1, 2),
        v_delta: [0, 0, 1],
        weights: [3, 7, 8, 18],
        facet_normals: [[-7, -7, 2], [-1, -1, 2], [-1, 1, 0], [7, -2, -2]],
        theta_plus: [[2, 1, 7], [0, 1, 0], [-2, -3, -3]],
        n_theta_plus: [7, -2, -2],
        theta_cap: [[-1, 1, 0], [0, -1, 0], [2, -1, 0]],
        supp: &[[-1, -1, 1], [-1, -1, 2], [-1, 0, 1], [-1, 1, 0], [0, -1, 0], [0, -1, 1], [1, -1, 0], [2, -1, 0], [7, -2, -2]],
        can_extra: &[[2, 1, 2]],
        can_drop: &[],
    },
    AsymFixture {
        id: 547446,
        vertices: [[0, 1, 1], [-6, 7, -15], [1, -2, 3], [1, 0, 0]],
        lambda_: (1, 2),
        v_delta: [-1, 1, -2],
        weights: [5, 8, 9, 22],
        facet_normals: [[-9, 21, 14], [-5, -3, -2], [-1, -1, 0], [9, 1, -3]],
        theta_plus: [[0, 1, 1], [-6, 7, -15], [1, -2, 3]],
        n_theta_plus: [9, 1, -3],
        theta_cap: [[-1, -1, 0], [0, 2, 1], [2, 0, -1]],
        supp: &[[-1, -1, 0], [-1, 0, 0], [0, 2, 1], [1, 1, 0], [2, 0, -1], [9, 1, -3]],
        can_extra: &[[1, 0, -1], [1, 0, 3]],
        can_drop: &[[1, 0, 0]],
    },
];
