use super::HollowFixture;

pub const HOLLOW: [HollowFixture; 12] = [
    HollowFixture {
        index: 1,
        vertices: &[[0, 0, 0], [6, 0, 0], [3, 3, 0], [4, 0, 2]],
        width: 2,
        fi_dim: -1,
        fi_vertices: &[],
        pi1: 1,
        supp: &[],
        fan_rays: &[],
    },
    HollowFixture {
        index: 2,
        vertices: &[[0, 0, 0], [4, 0, 0], [0, 4, 0], [2, 0, 2]],
        width: 2,
        fi_dim: -1,
        fi_vertices: &[],
        pi1: 1,
        supp: &[],
        fan_rays: &[],
    },
    HollowFixture {
        index: 3,
        vertices: &[[0, 0, 0], [3, 0, 0], [0, 3, 0], [3, 0, 3]],
        width: 3,
        fi_dim: -1,
        fi_vertices: &[],
        pi1: 1,
        supp: &[],
        fan_rays: &[],
    },
    HollowFixture {
        index: 4,
        vertices: &[[0, 0, 0], [4, 0, 0], [2, 4, 0], [3, 0, 2]],
        width: 2,
        fi_dim: 0,
        fi_vertices: &[[(5, 2), (2, 2), (2, 2)]],
        pi1: 2,
        supp: &[[-2, -1, -1], [0, -1, -2], [0, 0, -1], [0, 0, 1], [0, 1, 0], [2, -1, -3]],
        fan_rays: &[[2, -1, -3], [0, 0, 1], [0, 1, 0], [-2, -1, -1]],
    },
    HollowFixture {
        index: 5,
        vertices: &[[0, 0, 0], [2, 2, 0], [1, 1, 2], [3, -1, 2]],
        width: 2,
        fi_dim: 0,
        fi_vertices: &[[(3, 2), (1, 2), (2, 2)]],
        pi1: 2,
        supp: &[[-1, -1, -1], [-1, 1, 2], [0, 0, -1], [0, 0, 1], [1, -1, 0], [1, 1, -1]],
        fan_rays: &[[1, -1, 0], [1, 1, -1], [-1, 1, 2], [-1, -1, -1]],
    },
    HollowFixture {
        index: 6,
        vertices: &[[0, 0, 0], [2, 2, 0], [4, 0, 0], [2, -2, 0], [3, 1, 2]],
        width: 2,
        fi_dim: 0,
        fi_vertices: &[[(5, 2), (1, 2), (2, 2)]],
        pi1: 2,
        supp: &[[-1, -1, 0], [-1, 1, -1], [0, 0, -1], [0, 0, 1], [1, -1, -1], [1, 1, -2]],
        fan_rays: &[[0, 0, 1], [1, 1, -2], [1, -1, -1], [-1, -1, 0], [-1, 1, -1]],
    },
    HollowFixture {
        index: 7,
        vertices: &[[0, 0, 0], [1, 1, 0], [2, -2, 0], [3, -1, 0], [1, -1, 2], [2, 0, 2]],
        width: 2,
        fi_dim: 0,
        fi_vertices: &[[(3, 2), (-1, 2), (2, 2)]],
        pi1: 2,
        supp: &[[-1, -1, 0], [-1, 1, -1], [0, 0, -1], [0, 0, 1], [1, -1, -1], [1, 1, 0]],
        fan_rays: &[[0, 0, 1], [-1, 1, -1], [1, -1, -1], [1, 1, 0], [-1, -1, 0]],
    },
    HollowFixture {
        index: 8,
        vertices: &[[0, 0, 0], [1, 1, 0], [1, -1, 0], [2, 0, 0], [1, -1, 2], [2, 0, 2], [2, -2, 2], [3, -1, 2]],
        width: 2,
        fi_dim: 0,
        fi_vertices: &[[(3, 2), (-1, 2), (2, 2)]],
        pi1: 2,
        supp: &[[-1, -1, 0], [-1, 1, 1], [0, 0, -1], [0, 0, 1], [1, -1, -1], [1, 1, 0]],
        fan_rays: &[[-1, 1, 1], [0, 0, -1], [-1, -1, 0], [1, 1, 0], [1, -1, -1], [0, 0, 1]],
    },
    HollowFixture {
        index: 9,
        vertices: &[[0, 0, 0], [3, 0, 0], [1, 3, 0], [2, 0, 3]],
        width: 3,
        fi_dim: 1,
        fi_vertices: &[[(4, 3), (1, 1), (1, 1)], [(5, 3), (1, 1), (1, 1)]],
        pi1: 3,
        supp: &[[-3, -2, -1], [0, -1, -1], [0, 0, 1], [0, 1, 0], [3, -1, -2]],
        fan_rays: &[],
    },
    HollowFixture {
        index: 10,
        vertices: &[[0, 0, 0], [1, 2, 0], [1, -1, 0], [3, 0, 0], [2, 1, 3]],
        width: 3,
        fi_dim: 1,
        fi_vertices: &[[(4, 3), (2, 3), (1, 1)], [(5, 3), (1, 3), (1, 1)]],
        pi1: 3,
        supp: &[[-1, -1, 0], [-1, 2, -1], [0, 0, 1], [1, 1, -1], [2, -1, -1]],
        fan_rays: &[],
    },
    HollowFixture {
        index: 11,
        vertices: &[[0, 0, 0], [1, 1, 0], [3, 0, 0], [2, -1, 0], [4, 1, 3], [2, 2, 3]],
        width: 3,
        fi_dim: 1,
        fi_vertices: &[[(5, 3), (2, 3), (1, 1)], [(7, 3), (1, 3), (1, 1)]],
        pi1: 3,
        supp: &[[-1, -2, 1], [-1, 1, 0], [0, 0, 1], [1, -1, 0], [1, 2, -2]],
        fan_rays: &[],
    },
    HollowFixture {
        index: 12,
        vertices: &[[-1, 0, 0], [0, 1, -2], [1, 2, 1], [2, -2, -1]],
        width: 3,
        fi_dim: 3,
        fi_vertices: &[[(1, 5), (1, 5), (-2, 5)], [(2, 5), (2, 5), (-4, 5)], [(3, 5), (3, 5), (-1, 5)], [(4, 5), (-1, 5), (-3, 5)]],
        pi1: 5,
        supp: &[[-2, -1, 1], [0, 1, -2], [1, -1, 0], [1, 1, 1]],
        fan_rays: &[],
    },
];
