from fracver.main import main

main()
