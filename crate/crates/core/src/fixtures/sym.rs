use super::SymFixture;

pub const SYM: [SymFixture; 20] = [
    SymFixture {
        id: 547393,
        vertices: &[[0, 1, 0], [2, 1, 1], [-2, -3, -5], [2, 1, 9]],
        lambda_: (1, 2),
        v_delta: [0, 0, 1],
        theta_pair: [&[[0, 1, 0], [2, 1, 1], [-2, -3, -5]], &[[0, 1, 0], [-2, -3, -5], [2, 1, 9]]],
        supp: &[[-1, -2, 2], [-1, 1, 0], [0, -1, 0], [1, -1, 0], [2, -1, 0], [9, -2, -2]],
    },
    SymFixture {
        id: 547409,
        vertices: &[[-4, 2, 9], [1, 0, 0], [0, 1, 0], [7, -6, -18]],
        lambda_: (2, 3),
        v_delta: [1, -1, -3],
        theta_pair: [&[[-4, 2, 9], [1, 0, 0], [0, 1, 0]], &[[-4, 2, 9], [0, 1, 0], [7, -6, -18]]],
        supp: &[[-3, -3, -1], [-1, -1, 0], [-1, 2, -1], [2, -1, 1], [15, -3, 7]],
    },
    SymFixture {
        id: 547461,
        vertices: &[[0, 1, 0], [2, 1, 1], [-2, -3, -5], [0, 1, 4]],
        lambda_: (1, 2),
        v_delta: [0, 0, 1],
        theta_pair: [&[[0, 1, 0], [2, 1, 1], [-2, -3, -5]], &[[2, 1, 1], [-2, -3, -5], [0, 1, 4]]],
        supp: &[[-3, 6, -2], [-1, -2, 2], [-1, 1, 0], [0, -1, 0], [1, -1, 0], [2, -1, 0]],
    },
    SymFixture {
        id: 544442,
        vertices: &[[1, 0, 0], [0, 1, 0], [3, -6, 8], [1, -4, 4], [-5, 6, -12]],
        lambda_: (1, 2),
        v_delta: [1, -1, 2],
        theta_pair: [&[[0, 1, 0], [1, -4, 4], [-5, 6, -12]], &[[1, 0, 0], [0, 1, 0], [3, -6, 8]]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 1, 1], [1, -1, -1], [3, -1, -2], [10, -2, -5]],
    },
    SymFixture {
        id: 544443,
        vertices: &[[-1, -2, 0], [3, -6, 8], [0, 1, 0], [1, 0, 0], [-3, 4, -8]],
        lambda_: (1, 2),
        v_delta: [1, -1, 2],
        theta_pair: [&[[-1, -2, 0], [0, 1, 0], [-3, 4, -8]], &[[3, -6, 8], [0, 1, 0], [1, 0, 0]]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 1, 1], [1, -1, -1], [3, -1, -2], [6, -2, -3]],
    },
    SymFixture {
        id: 544651,
        vertices: &[[-4, 1, -3], [4, -2, 3], [0, 1, 0], [1, -2, 3], [-1, 1, -3]],
        lambda_: (2, 3),
        v_delta: [1, 0, 0],
        theta_pair: [&[[-4, 1, -3], [0, 1, 0], [1, -2, 3]], &[[4, -2, 3], [0, 1, 0], [-1, 1, -3]]],
        supp: &[[-3, -3, 1], [0, -1, -1], [0, -1, 0], [0, 2, 1], [3, -3, -4]],
    },
    SymFixture {
        id: 544696,
        vertices: &[[5, -4, -15], [1, 0, 0], [0, 1, 0], [-4, 2, 9], [-3, 1, 6]],
        lambda_: (2, 3),
        v_delta: [1, -1, -3],
        theta_pair: [&[[1, 0, 0], [0, 1, 0], [-4, 2, 9]], &[[5, -4, -15], [1, 0, 0], [-3, 1, 6]]],
        supp: &[[-3, -3, -1], [-3, 12, -4], [-1, -1, 0], [-1, 2, -1], [2, -1, 1]],
    },
    SymFixture {
        id: 544700,
        vertices: &[[-2, -3, -3], [0, 1, 0], [1, 0, 0], [-1, -4, -6], [2, 5, 9]],
        lambda_: (2, 3),
        v_delta: [1, 2, 3],
        theta_pair: [&[[-2, -3, -3], [0, 1, 0], [-1, -4, -6]], &[[0, 1, 0], [1, 0, 0], [2, 5, 9]]],
        supp: &[[-3, -3, 2], [-1, -1, 1], [-1, 2, -1], [2, -1, 0], [3, -3, 2]],
    },
    SymFixture {
        id: 544749,
        vertices: &[[-6, -5, -8], [0, 1, 0], [1, 0, 0], [-2, -1, 0], [3, 2, 4]],
        lambda_: (1, 2),
        v_delta: [1, 1, 2],
        theta_pair: [&[[-6, -5, -8], [0, 1, 0], [1, 0, 0]], &[[0, 1, 0], [-2, -1, 0], [3, 2, 4]]],
        supp: &[[-2, -2, 3], [-1, -1, 1], [-1, 1, 0], [-1, 3, -1], [1, -1, 0], [2, -2, -1]],
    },
    SymFixture {
        id: 520925,
        vertices: &[[0, 1, 0], [0, 0, 1], [-2, -1, 0], [-2, 0, -1], [8, 2, 3], [-2, -3, -2]],
        lambda_: (1, 2),
        v_delta: [2, 1, 1],
        theta_pair: [&[[-2, -1, 0], [-2, 0, -1], [-2, -3, -2]], &[[0, 1, 0], [0, 0, 1], [8, 2, 3]]],
        supp: &[[-1, -1, 3], [0, -1, 1], [0, 1, -1], [1, -2, -2], [1, -1, -1], [1, 0, 0]],
    },
    SymFixture {
        id: 520935,
        vertices: &[[3, 4, 6], [2, 1, 2], [-3, -2, -2], [1, 0, 0], [0, 1, 0], [-6, -5, -8]],
        lambda_: (1, 2),
        v_delta: [1, 1, 2],
        theta_pair: [&[[1, 0, 0], [0, 1, 0], [-6, -5, -8]], &[[3, 4, 6], [2, 1, 2], [-3, -2, -2]]],
        supp: &[[-2, -2, 3], [-1, -1, 1], [-1, 1, 0], [-1, 3, -1], [0, 4, -3], [1, -1, 0]],
    },
    SymFixture {
        id: 522056,
        vertices: &[[-1, -1, 0], [0, 1, 0], [1, 0, 0], [-1, -1, -3], [-5, -3, -6], [6, 4, 9]],
        lambda_: (2, 3),
        v_delta: [2, 1, 3],
        theta_pair: [&[[0, 1, 0], [-1, -1, -3], [-5, -3, -6]], &[[-1, -1, 0], [1, 0, 0], [6, 4, 9]]],
        supp: &[[-3, 6, -1], [-1, -1, 1], [-1, 2, 0], [0, -3, 2], [2, -1, -1]],
    },
    SymFixture {
        id: 522059,
        vertices: &[[2, 5, 6], [-2, -3, -3], [0, 1, 0], [1, 0, 0], [-1, -4, -6], [0, 1, 3]],
        lambda_: (2, 3),
        v_delta: [1, 2, 3],
        theta_pair: [&[[-2, -3, -3], [0, 1, 0], [-1, -4, -6]], &[[2, 5, 6], [1, 0, 0], [0, 1, 3]]],
        supp: &[[-3, 3, -2], [-1, -1, 1], [-1, 2, -1], [2, -1, 0], [3, -3, 2]],
    },
    SymFixture {
        id: 522087,
        vertices: &[[1, 0, -3], [1, 0, 0], [0, 1, 0], [-4, 2, 9], [-3, 1, 6], [5, -4, -12]],
        lambda_: (2, 3),
        v_delta: [1, -1, -3],
        theta_pair: [&[[1, 0, 0], [0, 1, 0], [-4, 2, 9]], &[[1, 0, -3], [-3, 1, 6], [5, -4, -12]]],
        supp: &[[-3, -3, -1], [-1, -1, 0], [-1, 2, -1], [2, -1, 1], [9, 0, 4]],
    },
    SymFixture {
        id: 522682,
        vertices: &[[2, 1, 4], [-3, -2, -4], [-2, -3, -4], [1, 2, 4], [1, 0, 0], [0, 1, 0]],
        lambda_: (1, 2),
        v_delta: [1, 1, 2],
        theta_pair: [&[[-3, -2, -4], [-2, -3, -4], [1, 0, 0], [0, 1, 0]], &[[2, 1, 4], [1, 2, 4], [1, 0, 0], [0, 1, 0]]],
        supp: &[[-2, -2, 1], [-2, -2, 3], [-1, -1, 1], [-1, 1, 0], [1, -1, 0], [1, 1, -1]],
    },
    SymFixture {
        id: 522684,
        vertices: &[[-2, -1, -4], [3, 2, 4], [-2, -1, 0], [1, 0, 0], [0, 1, 0], [-4, -3, -4]],
        lambda_: (1, 2),
        v_delta: [1, 1, 2],
        theta_pair: [&[[-2, -1, -4], [1, 0, 0], [-4, -3, -4]], &[[3, 2, 4], [-2, -1, 0], [0, 1, 0]]],
        supp: &[[-2, 2, 1], [-1, -1, 1], [-1, 1, 0], [-1, 3, -1], [1, -1, 0], [2, -2, -1]],
    },
    SymFixture {
        id: 526886,
        vertices: &[[-3, 4, -6], [1, 0, 0], [0, 1, 0], [3, -6, 8], [0, 1, -2], [2, -5, 6]],
        lambda_: (1, 2),
        v_delta: [1, -1, 2],
        theta_pair: [&[[-3, 4, -6], [0, 1, -2], [2, -5, 6]], &[[1, 0, 0], [0, 1, 0], [3, -6, 8]]],
        supp: &[[-2, -2, -1], [-1, -1, 0], [-1, 1, 1], [0, 4, 3], [1, -1, -1], [3, -1, -2]],
    },
    SymFixture {
        id: 439403,
        vertices: &[[1, 2, 2], [-1, 0, 0], [-1, 1, -1], [1, 0, 0], [-1, -2, -2], [1, 1, 3], [1, -3, -1]],
        lambda_: (1, 2),
        v_delta: [0, 1, 1],
        theta_pair: [&[[-1, 1, -1], [1, 0, 0], [-1, -2, -2], [1, -3, -1]], &[[1, 2, 2], [-1, 0, 0], [-1, 1, -1], [1, 1, 3]]],
        supp: &[[-2, -1, 3], [-1, -1, 1], [-1, 0, 0], [1, 0, 0], [1, 1, -1], [2, -1, -1]],
    },
    SymFixture {
        id: 275525,
        vertices: &[[4, 1, 2], [0, 1, 0], [-2, -1, 0], [1, 1, 2], [-3, -1, -2], [-2, -1, -2], [1, 1, 0], [1, -1, 0]],
        lambda_: (1, 2),
        v_delta: [1, 0, 0],
        theta_pair: [&[[0, 1, 0], [-2, -1, 0], [1, 1, 2], [-3, -1, -2]], &[[4, 1, 2], [-2, -1, -2], [1, 1, 0], [1, -1, 0]]],
        supp: &[[-2, 0, 3], [0, -1, 0], [0, -1, 1], [0, 1, -1], [0, 1, 0], [2, -2, -1]],
    },
    SymFixture {
        id: 275528,
        vertices: &[[-1, 0, -1], [-3, -2, 1], [-2, -1, 2], [0, -1, 0], [0, 1, 0], [1, 0, 1], [2, 1, -2], [3, 2, -1]],
        lambda_: (1, 2),
        v_delta: [1, 1, -1],
        theta_pair: [&[[-3, -2, 1], [-2, -1, 2], [0, -1, 0], [1, 0, 1]], &[[-1, 0, -1], [0, 1, 0], [2, 1, -2], [3, 2, -1]]],
        supp: &[[-1, 1, 0], [-1, 2, -1], [0, -1, -1], [0, 1, 1], [1, -2, 1], [1, -1, 0]],
    },
];
