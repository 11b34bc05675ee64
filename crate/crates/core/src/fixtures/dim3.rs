use super::Dim3Fixture;

pub const DIM3: [Dim3Fixture; 49] = [
    Dim3Fixture {
        id: 547444,
        vertices: &[[1, 0, 0], [-2, -4, -5], [1, 2, 4], [1, 4, 2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (-1, 1), (-3, 2)], [(0, 1), (-1, 3), (-2, 3)], [(0, 1), (1, 3), (-1, 3)]],
        supp: &[[-2, -1, 2], [-1, 0, 0], [-1, 2, -1], [1, 1, -1], [3, 0, -1], [5, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 547465,
        vertices: &[[-3, -2, -2], [1, 0, 0], [1, 3, 1], [1, 1, 3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (-1, 2)], [(0, 1), (3, 4), (1, 4)], [(0, 1), (1, 4), (3, 4)]],
        supp: &[[-1, -1, 3], [-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 3, -1], [2, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 2,
    },
    Dim3Fixture {
        id: 547524,
        vertices: &[[0, 2, 1], [-2, -3, -5], [2, 1, 1], [0, 0, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 2), (0, 1)], [(1, 3), (1, 3), (0, 1)], [(-1, 3), (-1, 3), (-1, 1)]],
        supp: &[[-1, -2, 2], [-1, 1, 0], [-1, 2, -1], [0, 0, -1], [0, 1, -1], [0, 2, -1], [1, 0, -1], [1, 1, -1], [2, 0, -1], [3, 0, -1]],
        can_extra: &[[0, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 547525,
        vertices: &[[0, 0, 1], [0, 1, 0], [2, 1, 1], [-2, -5, -7]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 2)], [(1, 3), (0, 1), (-1, 3)], [(-1, 3), (-1, 1), (-5, 3)]],
        supp: &[[-1, -2, 2], [-1, 2, -1], [0, -1, 0], [0, 0, -1], [0, 1, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [1, 1, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1], [3, -1, 0], [3, 0, -1], [4, -1, -1], [4, 0, -1], [5, -1, -1], [6, -1, -1]],
        can_extra: &[[1, 1, 1], [-1, -2, -3]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 545317,
        vertices: &[[-3, 4, -6], [0, 1, 0], [1, 0, 0], [1, -2, 4], [3, -5, 6]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 1), (-3, 2), (2, 1)], [(2, 3), (-2, 3), (1, 1)], [(1, 2), (-1, 2), (1, 1)], [(2, 3), (-1, 1), (5, 3)]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 2, 2], [1, -1, -1], [1, 2, 1], [3, 2, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 545932,
        vertices: &[[0, -1, -1], [1, -1, -3], [-2, 1, 5], [1, 0, 0], [1, 2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [0, 1, 0], [1, 1, 0], [2, 0, 1], [3, 0, 1], [5, -1, 2]],
        can_extra: &[[1, -1, -2], [1, 0, -3]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546013,
        vertices: &[[3, -5, 6], [1, -2, 4], [1, 0, 0], [-1, 1, -2], [-1, 3, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 1), (-3, 2), (2, 1)], [(0, 1), (1, 2), (0, 1)], [(1, 2), (-1, 4), (1, 2)], [(1, 2), (-3, 4), (3, 2)]],
        supp: &[[-2, -2, -1], [-1, 0, 1], [-1, 2, 2], [0, 1, 1], [1, 0, 0], [1, 2, 1], [2, 1, 0], [3, 0, -1], [3, 2, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 2,
    },
    Dim3Fixture {
        id: 546062,
        vertices: &[[0, 1, 3], [-2, 1, -1], [0, 1, 0], [1, 0, 0], [-1, -2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (-1, 2), (-1, 2)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 3), (0, 1), (1, 3)]],
        supp: &[[-1, -1, 0], [-1, -1, 1], [-1, -1, 2], [-1, 0, 0], [-1, 0, 1], [-1, 1, 0], [-1, 2, -1], [0, -1, 0], [2, 1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546070,
        vertices: &[[0, -2, -3], [0, 2, 1], [-2, -3, -5], [2, 1, 1], [0, 0, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 2), (0, 1)], [(1, 2), (1, 4), (0, 1)], [(0, 1), (-1, 2), (-1, 1)], [(-1, 2), (-3, 4), (-3, 2)]],
        supp: &[[-1, -2, 2], [-1, 2, -1], [0, 0, -1], [0, 1, -1], [0, 2, -1], [1, 0, -1], [1, 1, -1], [2, 0, -1], [3, 0, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 2,
    },
    Dim3Fixture {
        id: 546205,
        vertices: &[[1, 2, -2], [-1, 0, 2], [1, 0, 0], [-2, 1, 5], [1, -1, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [-1, 3, -1], [0, 1, 0], [1, 1, 0], [1, 2, 0], [2, 0, 1], [3, 0, 1], [3, 1, 1], [5, -1, 2], [5, 0, 2], [7, -1, 3]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546219,
        vertices: &[[1, 1, 1], [-3, -2, -2], [1, 0, 0], [1, 3, 1], [-1, -1, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (-1, 2)], [(-1, 3), (1, 3), (0, 1)], [(-2, 3), (-1, 3), (0, 1)]],
        supp: &[[-1, -1, 3], [-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, -1], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [0, 0, -1], [2, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546663,
        vertices: &[[2, -3, -1], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-2, -3, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (0, 1)], [(1, 3), (-1, 1), (-1, 3)], [(-1, 3), (-1, 1), (-2, 3)]],
        supp: &[[-1, -1, -1], [-1, -1, 0], [-1, -1, 1], [-1, -1, 2], [-1, 0, -1], [0, -1, -1], [0, -1, 0], [0, -1, 1], [0, 0, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [1, 2, -2], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1]],
        can_extra: &[[-1, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546862,
        vertices: &[[1, 0, 0], [0, 1, 0], [-2, 1, 5], [1, -1, -3], [1, 2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [-1, 3, -1], [0, 1, 0], [0, 4, -1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1], [5, -1, 2], [5, 0, 2], [6, 1, 2], [7, -1, 3], [8, 0, 3], [10, -1, 4]],
        can_extra: &[[0, 0, 1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 546863,
        vertices: &[[-1, -1, 1], [1, 3, 1], [0, 0, 1], [1, 0, 0], [-3, -2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (-1, 2)], [(-1, 3), (1, 3), (0, 1)], [(-2, 3), (-1, 3), (0, 1)]],
        supp: &[[-1, -1, 3], [-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, -1], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [0, 0, -1], [2, -1, -1]],
        can_extra: &[[1, 1, 1]],
        can_drop: &[[0, 0, 1]],
        pi1: 1,
    },
    Dim3Fixture {
        id: 547240,
        vertices: &[[-1, 1, -2], [0, 1, 0], [1, 0, 0], [1, -2, 4], [3, -5, 6]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 1), (-3, 2), (2, 1)], [(2, 3), (-2, 3), (1, 1)], [(1, 2), (-1, 2), (1, 1)], [(2, 3), (-1, 1), (5, 3)]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 0, 1], [-1, 2, 2], [0, -1, 0], [0, 1, 1], [1, -1, -1], [1, 0, 0], [1, 2, 1], [2, -1, -1], [2, 1, 0], [3, 0, -1], [3, 2, 0]],
        can_extra: &[[0, 1, -1], [0, 0, 1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 547246,
        vertices: &[[0, -2, -3], [-2, -3, -5], [2, 1, 1], [0, 1, 0], [0, 0, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 2)], [(1, 3), (0, 1), (-1, 3)], [(0, 1), (-1, 2), (-1, 1)], [(-1, 3), (-2, 3), (-4, 3)]],
        supp: &[[-1, -2, 2], [-1, 2, -1], [0, -1, 0], [0, 0, -1], [0, 1, -1], [0, 2, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [1, 1, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1], [3, 0, -1], [4, -1, -1]],
        can_extra: &[[1, 1, 1], [-1, -1, -2]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 532384,
        vertices: &[[1, -1, -3], [-2, 1, 5], [1, 0, 0], [1, -1, -2], [0, -1, -1], [1, 2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [0, 1, 0], [1, 1, 0], [2, 0, 1], [3, 0, 1], [5, -1, 2]],
        can_extra: &[[1, 0, -3]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 532606,
        vertices: &[[0, -1, 2], [-1, -1, 0], [0, 1, 0], [1, 0, 0], [2, 2, -3], [-2, 0, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 2), (-1, 2)], [(1, 3), (2, 3), (-1, 1)], [(-1, 3), (1, 3), (-1, 1)]],
        supp: &[[-1, -1, -1], [-1, 1, 0], [-1, 2, 1], [0, -1, -1], [0, 1, 0], [1, -2, 0], [1, -1, -1], [2, -1, -1]],
        can_extra: &[[0, -1, 1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 533513,
        vertices: &[[-1, 1, 2], [1, 0, 0], [0, 1, 0], [1, 1, 2], [-1, -2, -4], [-2, -3, -4]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-1, 3), (0, 1), (-1, 3)], [(-2, 3), (-2, 3), (-1, 1)]],
        supp: &[[-1, -1, 1], [-1, 0, 0], [-1, 1, 0], [-1, 2, -1], [0, -1, 0], [0, 1, -1], [0, 3, -2], [2, -2, 1]],
        can_extra: &[[1, 1, 1], [0, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 534667,
        vertices: &[[1, 0, 3], [-1, -1, -1], [0, 1, 0], [1, 0, 0], [-1, -1, 0], [5, 2, 3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 2), (1, 2), (1, 2)], [(4, 3), (2, 3), (1, 1)], [(2, 3), (1, 3), (1, 1)]],
        supp: &[[-1, -1, 2], [-1, -1, 3], [-1, 0, 2], [-1, 1, 1], [-1, 2, 0], [0, -1, 1], [0, -1, 2], [0, 0, 1], [0, 1, 0], [1, -2, -1], [1, -1, 0], [1, -1, 1], [1, 0, 0], [2, -1, -1], [2, -1, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 534669,
        vertices: &[[1, 3, 0], [5, 3, 2], [-1, -1, -1], [0, 0, 1], [1, 0, 0], [-1, -1, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 2), (1, 2), (1, 2)], [(4, 3), (1, 1), (2, 3)], [(2, 3), (1, 1), (1, 3)]],
        supp: &[[-1, 0, 2], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [0, 0, 1], [0, 1, -1], [0, 1, 0], [1, -1, -2], [1, 0, -1], [1, 0, 0], [2, -1, -1], [2, -1, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 534866,
        vertices: &[[-1, -1, -3], [1, 0, 0], [0, 1, 0], [1, 1, 1], [-1, -1, 0], [-3, -5, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (-1, 2)], [(-1, 3), (-2, 3), (-1, 1)], [(-2, 3), (-4, 3), (-1, 1)]],
        supp: &[[-2, 1, 1], [-1, -1, 1], [-1, 0, 0], [-1, 1, -1], [-1, 2, -2], [0, -1, 0], [0, 0, -1], [0, 1, -2], [1, -1, -1], [1, -1, 0], [1, 0, -2], [1, 0, -1], [2, -1, -2], [2, -1, -1], [2, -1, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 535952,
        vertices: &[[3, -5, 6], [1, -2, 4], [1, 0, 0], [0, 1, 0], [-1, 1, -2], [-1, 2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 1), (-3, 2), (2, 1)], [(2, 3), (-2, 3), (1, 1)], [(1, 2), (-1, 2), (1, 1)], [(2, 3), (-1, 1), (5, 3)]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 0, 1], [-1, 2, 2], [0, 1, 1], [1, -1, -1], [1, 0, 0], [1, 2, 1], [2, 1, 0], [3, 0, -1], [3, 2, 0]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 536013,
        vertices: &[[0, 1, 1], [0, 0, 1], [0, 1, 0], [2, 1, 1], [-2, -3, -5], [0, -2, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 2)], [(1, 3), (0, 1), (-1, 3)], [(0, 1), (-1, 2), (-1, 1)], [(-1, 3), (-2, 3), (-4, 3)]],
        supp: &[[-1, -2, 2], [-1, 2, -1], [0, -1, 0], [0, 0, -1], [0, 1, -1], [0, 2, -1], [1, -1, 0], [1, 0, -1], [1, 1, -1], [2, -1, 0], [2, 0, -1], [3, 0, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 536498,
        vertices: &[[1, 2, -2], [1, -1, -2], [1, 0, 0], [0, 1, 0], [-2, 1, 5], [1, -1, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [0, 1, 0], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1], [5, -1, 2], [5, 0, 2], [6, 1, 2], [7, -1, 3], [8, 0, 3], [10, -1, 4]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 537834,
        vertices: &[[0, 0, 1], [1, 0, 0], [0, 1, 0], [-2, 1, 5], [1, -1, -3], [1, 2, -2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (2, 3), (1, 3)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [-1, 3, -1], [0, 1, 0], [0, 4, -1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1], [5, -1, 2], [5, 0, 2], [6, 1, 2], [7, -1, 3], [8, 0, 3], [10, -1, 4]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 538356,
        vertices: &[[-2, -3, -3], [-1, -3, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0], [-1, -1, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (-1, 2)], [(-1, 3), (-2, 3), (-1, 1)], [(-1, 3), (-1, 1), (-2, 3)], [(-1, 2), (-1, 1), (-1, 1)]],
        supp: &[[-2, 1, 1], [-1, -1, -1], [-1, -1, 0], [-1, -1, 1], [-1, 0, -1], [-1, 0, 0], [-1, 1, -1], [0, -1, -1], [0, -1, 0], [0, 0, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1]],
        can_extra: &[[-1, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 539063,
        vertices: &[[-1, 1, -1], [1, 1, 3], [-3, -2, -2], [1, 0, 0], [0, 1, 0], [1, 1, 2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (-1, 2)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 3), (0, 1), (1, 3)]],
        supp: &[[-1, -1, 1], [-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 3, -1], [0, -1, 0], [2, -1, -1]],
        can_extra: &[[1, 1, 1]],
        can_drop: &[[0, 1, 0], [1, 1, 2]],
        pi1: 1,
    },
    Dim3Fixture {
        id: 539304,
        vertices: &[[1, 0, 1], [-3, -1, -2], [1, 1, 2], [-2, -1, 0], [1, 0, 0], [1, 2, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 2), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(0, 1), (1, 3), (1, 3)], [(-2, 3), (0, 1), (-1, 3)]],
        supp: &[[-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 2, 1], [-1, 3, 0], [0, 1, -1], [0, 1, 0], [2, -2, -1]],
        can_extra: &[[-2, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 539313,
        vertices: &[[1, -1, -2], [1, 1, -1], [-1, 2, 2], [1, -1, -3], [-2, 1, 5], [1, 0, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (1, 2), (1, 2)], [(-1, 3), (2, 3), (1, 1)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [0, 1, 0], [1, -1, 1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1], [5, 0, 2], [6, 1, 2]],
        can_extra: &[[-1, 1, 2]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 540602,
        vertices: &[[0, 0, 1], [1, 0, 0], [-2, 1, 5], [1, -1, -3], [-1, 2, 2], [1, 1, -1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (1, 2), (1, 2)], [(-1, 3), (2, 3), (1, 1)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [-1, 3, -1], [0, 1, 0], [0, 4, -1], [1, -1, 1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1], [5, 0, 2], [6, 1, 2]],
        can_extra: &[[-1, 1, 2]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 540663,
        vertices: &[[1, 0, 0], [0, 1, 0], [1, 1, 2], [-3, -1, -2], [1, 1, 1], [-3, -2, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (0, 1)], [(-1, 3), (0, 1), (1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 1], [-1, -1, 2], [-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [-1, 2, 1], [0, -1, 0], [0, -1, 1], [2, -2, -1]],
        can_extra: &[[-1, 0, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 474457,
        vertices: &[[-1, 2, -3], [1, 0, 2], [0, 0, 1], [0, 1, 0], [1, 0, 0], [-1, -1, 0], [-3, -2, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (0, 1), (-1, 2)], [(-1, 3), (1, 3), (-1, 1)], [(-2, 3), (-1, 3), (-1, 1)]],
        supp: &[[-2, 1, 2], [-1, -1, 0], [-1, 0, 0], [-1, 1, 0], [-1, 2, 0], [1, -1, -1], [1, 0, -1], [2, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 481575,
        vertices: &[[3, 2, 4], [-1, -1, -2], [-3, -1, -2], [-2, -1, 0], [0, 1, 0], [1, 0, 0], [0, 0, -1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(1, 2), (1, 2), (1, 1)], [(0, 1), (1, 3), (1, 3)], [(-1, 3), (0, 1), (1, 3)]],
        supp: &[[-1, -1, 1], [-1, 0, 1], [-1, 1, 0], [-1, 2, 0], [-1, 3, -1], [0, -1, 1], [0, 1, 0], [2, -2, -1]],
        can_extra: &[[-1, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 483109,
        vertices: &[[3, 0, 2], [1, -2, -2], [0, 0, -1], [-1, -1, 0], [1, 1, 1], [0, 1, 0], [-1, 0, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (0, 1)], [(2, 3), (-1, 3), (1, 3)], [(1, 3), (-2, 3), (-1, 3)]],
        supp: &[[-1, -1, 1], [0, -1, 0], [0, -1, 1], [0, 2, -1], [1, -1, -1], [1, -1, 0], [1, -1, 1], [1, 0, -2], [1, 0, -1], [1, 0, 0], [1, 0, 1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 490478,
        vertices: &[[1, -1, -2], [1, 1, -1], [-1, 2, 2], [1, -1, -3], [-2, 1, 5], [1, 0, 0], [-1, 0, 2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (1, 2), (1, 2)], [(-1, 3), (2, 3), (1, 1)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [0, 1, 0], [1, -1, 1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [3, 0, 1], [3, 1, 1], [5, 0, 2]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 490481,
        vertices: &[[-3, -2, 0], [-5, -3, -2], [1, 0, 0], [0, 1, 0], [1, 1, 2], [-1, -1, -1], [2, 1, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (0, 1)], [(-1, 3), (0, 1), (1, 3)], [(-4, 3), (-2, 3), (-1, 3)]],
        supp: &[[-1, -1, 2], [-1, -1, 3], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [0, -1, 0], [0, -1, 1], [0, -1, 2], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 490485,
        vertices: &[[-1, -1, 0], [1, 2, 0], [1, 0, 0], [-2, -1, 0], [1, 1, 2], [-3, -1, -2], [1, 0, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (1, 2), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(0, 1), (1, 3), (1, 3)], [(-2, 3), (0, 1), (-1, 3)]],
        supp: &[[-1, 0, 0], [-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 2, 1], [0, 1, -1], [0, 1, 0], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 490511,
        vertices: &[[1, 0, 0], [0, 1, 0], [-2, -1, 0], [1, 1, 2], [2, 1, 1], [1, 0, 1], [-5, -2, -4]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-3, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 2], [-1, 0, 1], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 3, 0], [0, -1, 0], [0, 1, -1], [2, -2, -1]],
        can_extra: &[[2, 1, 2]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 495687,
        vertices: &[[0, 0, -1], [1, 1, -1], [-1, 2, 2], [1, -1, -3], [-2, 1, 5], [1, 0, 0], [0, 0, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (1, 2), (3, 2)], [(0, 1), (1, 3), (2, 3)], [(0, 1), (1, 2), (1, 2)], [(-1, 3), (2, 3), (1, 1)]],
        supp: &[[-2, -1, -1], [-1, 0, 0], [-1, 2, -1], [-1, 3, -1], [0, 1, 0], [0, 4, -1], [1, -1, 1], [1, 1, 0], [1, 2, 0], [2, 0, 1], [2, 3, 0], [3, 0, 1], [3, 1, 1], [4, 2, 1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 499287,
        vertices: &[[1, 1, 1], [-1, -1, -3], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -3, -1], [-2, -3, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (-1, 2)], [(-1, 3), (-2, 3), (-1, 1)], [(-1, 3), (-1, 1), (-2, 3)], [(-1, 2), (-1, 1), (-1, 1)]],
        supp: &[[-2, 1, 1], [-1, -1, 1], [-1, 0, 0], [-1, 1, -1], [0, -1, 0], [0, 0, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1]],
        can_extra: &[[-1, -1, -1]],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 499291,
        vertices: &[[-1, -1, -1], [-1, -1, -3], [1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -3, -1], [-2, -3, -3]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (-1, 2)], [(-1, 3), (-2, 3), (-1, 1)], [(-1, 3), (-1, 1), (-2, 3)], [(-1, 2), (-1, 1), (-1, 1)]],
        supp: &[[-2, 1, 1], [-1, -1, -1], [-1, -1, 0], [-1, -1, 1], [-1, 0, -1], [-1, 0, 0], [-1, 1, -1], [0, -1, -1], [0, -1, 0], [0, 0, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 499470,
        vertices: &[[1, 0, 0], [0, 1, 0], [-2, -1, 0], [1, 1, 2], [0, 0, 1], [-5, -2, -4], [2, 1, 1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-3, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 2], [-1, 0, 1], [-1, 1, 0], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [-1, 3, -1], [-1, 3, 0], [0, -1, 0], [0, 1, -1], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 501298,
        vertices: &[[3, -6, 8], [-1, 1, -2], [1, -2, 3], [0, 1, 0], [1, 0, 0], [0, 1, -1], [3, -5, 6]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(1, 2), (-1, 2), (1, 1)], [(2, 3), (-2, 3), (1, 1)], [(1, 1), (-3, 2), (2, 1)], [(1, 1), (-5, 3), (7, 3)]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 0, 1], [-1, 2, 2], [0, -1, 0], [0, 1, 1], [1, -1, -1], [1, 0, 0], [1, 2, 1], [2, -1, -1], [2, 1, 0], [3, -1, -2], [3, 0, -1], [4, -1, -2], [5, 0, -2], [6, -1, -3]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 501330,
        vertices: &[[1, 0, 0], [0, 1, 0], [-2, -1, 0], [1, 1, 2], [1, 1, 1], [0, 0, 1], [-5, -2, -4]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-3, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 1], [-1, -1, 2], [-1, 0, 0], [-1, 0, 1], [-1, 1, 0], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [-1, 3, -1], [-1, 3, 0], [0, -1, 0], [0, 1, -1], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 354912,
        vertices: &[[3, 1, 2], [1, 0, 0], [0, 1, 0], [-2, -1, 0], [1, 1, 2], [2, 1, 1], [1, 0, 1], [-5, -2, -4]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-3, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 2], [-1, 0, 1], [-1, 1, 1], [-1, 2, 0], [-1, 3, 0], [0, -1, 0], [0, 1, -1], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 372528,
        vertices: &[[2, 1, 1], [-1, -1, -1], [1, 1, 2], [0, 1, 0], [1, 0, 0], [-5, -3, -2], [-3, -2, 0], [1, 1, 0]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-1, 2), (0, 1), (0, 1)], [(-1, 1), (-1, 2), (0, 1)], [(-1, 3), (0, 1), (1, 3)], [(-4, 3), (-2, 3), (-1, 3)]],
        supp: &[[-1, 0, 1], [-1, 0, 2], [-1, 1, 0], [-1, 1, 1], [-1, 2, -1], [-1, 2, 0], [0, -1, 0], [0, -1, 1], [0, -1, 2], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 372973,
        vertices: &[[-5, -2, -4], [1, 0, 1], [2, 1, 1], [1, 1, 2], [-2, -1, 0], [0, 1, 0], [1, 0, 0], [2, 1, 2]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(-3, 2), (-1, 2), (-1, 1)], [(-1, 2), (0, 1), (0, 1)], [(-2, 3), (0, 1), (-1, 3)], [(-1, 1), (-1, 3), (-1, 3)]],
        supp: &[[-1, -1, 2], [-1, 0, 1], [-1, 1, 0], [-1, 1, 1], [-1, 2, 0], [-1, 3, 0], [0, -1, 0], [0, 1, -1], [2, -2, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
    Dim3Fixture {
        id: 388701,
        vertices: &[[1, 1, 1], [-2, -3, -3], [-1, -3, -1], [0, 0, 1], [0, 1, 0], [1, 0, 0], [-1, -1, -3], [-1, -1, -1]],
        fi_vertices: &[[(0, 1), (0, 1), (0, 1)], [(0, 1), (-1, 2), (-1, 2)], [(-1, 3), (-2, 3), (-1, 1)], [(-1, 3), (-1, 1), (-2, 3)], [(-1, 2), (-1, 1), (-1, 1)]],
        supp: &[[-2, 1, 1], [-1, -1, 1], [-1, 0, 0], [-1, 1, -1], [0, -1, 0], [0, 0, -1], [1, -1, -1], [1, -1, 0], [1, 0, -1], [2, -1, -1], [2, -1, 0], [2, 0, -1], [3, -1, -1]],
        can_extra: &[],
        can_drop: &[],
        pi1: 1,
    },
];
