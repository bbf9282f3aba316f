#! /usr/bin/env python

if __name__ == '__main__':
    from psolenoid import main
    main()
